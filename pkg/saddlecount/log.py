"""
Output channels. Results go to stdout, everything else to stderr.
"""
import sys

if sys.stderr.isatty():
    CYAN = "\033[36m\033[1m"
    RESET = "\033[0m"
else:
    CYAN = ""
    RESET = ""


def log_message(message: str) -> None:
    """
    Log diagnostics, progress and tracebacks.
    """
    print(message, file=sys.stderr)


def log_heading(message: str) -> None:
    log_message(f"{CYAN}{message}{RESET}")


def log_result(message: str) -> None:
    """
    Log the result of a command, the only thing written to stdout.
    """
    print(message, file=sys.stdout)
