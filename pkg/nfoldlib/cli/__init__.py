"""
The 'cli' package is the ``taufold`` command line.

Main Features:
    - Run configuration with validation (RunConfig).
    - Command dispatch with text, JSON and DOT output and exit codes (run).
    - Argument parsing and logging setup (main, build_parser).
"""
from .run_config import RunConfig
from .run import run
from .main import main
from .main import build_parser
