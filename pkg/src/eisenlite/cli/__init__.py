from .config import COMMANDS, SUITE_ALIASES, SUITES, RunConfig, load_config_file
from .report import RunResult
from .commands import COMMAND_HANDLERS, run
from .verify import FAMILIES, CheckResult, check_family, golden_dir, verify_normalized_series, verify_golden_tables
from .main import build_parser, main

__all__ = [
    # Configuration
    "COMMANDS",
    "SUITES",
    "SUITE_ALIASES",
    "RunConfig",
    "load_config_file",
    # Dispatch
    "RunResult",
    "COMMAND_HANDLERS",
    "run",
    # Verification
    "FAMILIES",
    "CheckResult",
    "check_family",
    "golden_dir",
    "verify_normalized_series",
    "verify_golden_tables",
    # Entry point
    "build_parser",
    "main",
]
