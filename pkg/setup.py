import codecs

import setuptools


def long_description():
    with codecs.open("README.md", encoding="utf8") as f:
        return f.read()


setuptools.setup(
    name="saddlecount",
    version="0.1.0",
    license="MIT",
    description="Exact Siegel-Veech constants for strata of abelian differentials",
    install_requires=[
        "numpy>=1.17",
        # Runs simulation trials on a thread pool
        "twisted>=20.3.0",
    ],
    extras_require={
        "test": ["pytest>=6.0"],
    },
    long_description=long_description(),
    long_description_content_type="text/markdown",
    packages=["saddlecount", "saddlecount.config", "saddlecount.sv", "saddlecount.flatsim"],
    package_data={"saddlecount": ["volumes.txt"]},
    entry_points={
        "console_scripts": [
            "saddlecount=saddlecount.__main__:main",
        ]
    },
    python_requires=">=3.7",
    keywords="translation surfaces siegel-veech saddle connections moduli",
    classifiers=[
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
