#!/usr/bin/env python3
"""
posetx - Main Entry Point

Commands:
1. info / downsets / expo on a single poset file
2. catalog build | verify | matrices | tables over the unlabeled catalog

Results go to stdout; logs go to stderr and the log file.
"""

import logging
import sys
from typing import List, Optional

from src.cli.config import parse_arguments
from src.exceptions import BudgetExceeded, PosetError, VerificationError
from src.logging import LoggingManager
from src.progress import create_progress_tracker
from src.settings import EngineSettings, set_settings
from src.workflows import (
    run_build, run_downsets, run_expo, run_info, run_matrices, run_tables, run_verify,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INTERRUPTED = 130


def dispatch(args, progress_tracker) -> None:
    """Run the workflow selected by the parsed arguments."""
    if args.command == 'info':
        run_info(args.file, args.format)
    elif args.command == 'downsets':
        run_downsets(args.file, args.algo, args.list, args.format)
    elif args.command == 'expo':
        run_expo(args.file, args.m, args.sum, args.verify, args.m_max, args.format)
    elif args.action == 'build':
        run_build(args.max_k, args.out, args.format, progress_tracker)
    elif args.action == 'verify':
        run_verify(args.max_k, args.m_max, args.seed, args.input, args.format, progress_tracker)
    elif args.action == 'matrices':
        run_matrices(args.max_k, args.m_max, args.input, args.format, progress_tracker)
    else:
        run_tables(args.max_k, args.input, args.format, progress_tracker)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point - parse config and run one command.

    Returns:
        Exit code: 0 success, 1 verification failure, 2 input error,
        3 budget exceeded, 130 on Ctrl+C
    """
    args = parse_arguments(argv)

    logging_manager = LoggingManager.get_instance()
    logging_manager.setup(args.log_file, console_level=args.console_log_level)

    try:
        set_settings(EngineSettings(oracle_budget=args.budget, threads=args.threads, seed=args.seed))
        progress_tracker = create_progress_tracker(args.progress, logging_manager)
        with progress_tracker:
            dispatch(args, progress_tracker)
        return EXIT_OK

    except VerificationError as e:
        logger.error(f"Verification failed: {e}")
        logger.debug("Full error details:", exc_info=True)
        return EXIT_VERIFICATION

    except BudgetExceeded as e:
        logger.error(f"Budget exceeded: {e}")
        logger.error("Raise --budget or lower --max-k")
        logger.debug("Full error details:", exc_info=True)
        return EXIT_BUDGET

    except PosetError as e:
        logger.error(f"Invalid input: {e}")
        logger.debug("Full error details:", exc_info=True)
        return EXIT_INPUT

    except FileNotFoundError as e:
        logger.error(f"File not found: {e}")
        logger.debug("Full error details:", exc_info=True)
        return EXIT_INPUT

    except PermissionError as e:
        logger.error(f"Permission denied: {e}")
        logger.debug("Full error details:", exc_info=True)
        return EXIT_INPUT

    except ValueError as e:
        logger.error(f"Invalid argument or data: {e}")
        logger.debug("Full error details:", exc_info=True)
        return EXIT_INPUT

    except KeyboardInterrupt:
        logger.warning("Interrupted by user (Ctrl+C)")
        return EXIT_INTERRUPTED

    except Exception as e:
        logger.error(f"Unexpected error occurred: {e}")
        logger.error("Please check the log file for detailed error information")
        logger.debug("Full error details:", exc_info=True)
        return EXIT_INPUT

    finally:
        logging_manager.cleanup()


if __name__ == '__main__':
    sys.exit(main())
