"""
CLI Configuration Module

Handles command-line argument parsing and environment configuration.
"""

import argparse
import logging
import os
from pathlib import Path
from typing import List, Optional, Sequence

from dotenv import load_dotenv

from src.catalog.enumerate import MAX_CATALOG_K
from src.settings import DEFAULT_BUDGET, DEFAULT_SEED

logger = logging.getLogger(__name__)

TRUTHY = ('true', '1', 'yes')


def _env_int(name: str, default: int, minimum: int) -> int:
    """Integer environment value, or the default with a warning when invalid."""
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        # POSETX_BUDGET is commonly written as 1e8
        value = int(float(raw)) if 'e' in raw.lower() else int(raw)
    except ValueError:
        logger.warning(f"Invalid {name} value '{raw}', using default {default}")
        return default
    if value < minimum:
        logger.warning(f"{name} must be at least {minimum}, got {value}. Using default {default}.")
        return default
    return value


def _env_choice(name: str, default: str, choices: Sequence[str]) -> str:
    value = os.getenv(name, default).lower()
    if value not in choices:
        logger.warning(f"Invalid {name} value '{value}', using default '{default}'")
        return default
    return value


def _add_common(parser: argparse.ArgumentParser, defaults: dict) -> None:
    parser.add_argument(
        '--format',
        choices=['text', 'json'],
        default=defaults['format'],
        help=f"Output format (default: {defaults['format']})"
    )
    parser.add_argument(
        '--seed',
        type=int,
        default=defaults['seed'],
        help=f"Seed for randomized checks (default: {defaults['seed']})"
    )
    parser.add_argument(
        '--threads',
        type=int,
        default=defaults['threads'],
        help=f"Worker threads for per-class sweeps (default: {defaults['threads']})"
    )
    parser.add_argument(
        '--budget',
        type=int,
        default=defaults['budget'],
        help=f"Cap on objects an exhaustive oracle may visit (default: {defaults['budget']})"
    )
    parser.add_argument(
        '--verbose',
        action='store_true',
        default=defaults['verbose'],
        help='Show INFO messages on stderr'
    )
    parser.add_argument(
        '--debug',
        action='store_true',
        default=defaults['debug'],
        help='Show DEBUG messages on stderr'
    )
    parser.add_argument(
        '--progress',
        choices=['auto', 'on', 'off'],
        default=defaults['progress'],
        help=f"Progress display mode: auto (only on a terminal), on, off (default: {defaults['progress']})"
    )


def build_parser() -> argparse.ArgumentParser:
    """Parser with environment-derived defaults; reads the environment when called."""
    env_max_k = min(_env_int('POSETX_MAX_K', 5, 0), MAX_CATALOG_K)
    env_m_max = _env_int('POSETX_M_MAX', 6, 0)
    defaults = {
        'format': _env_choice('POSETX_FORMAT', 'text', ('text', 'json')),
        'seed': _env_int('POSETX_SEED', DEFAULT_SEED, 0),
        'threads': _env_int('POSETX_THREADS', 1, 1),
        'budget': _env_int('POSETX_BUDGET', DEFAULT_BUDGET, 1),
        'verbose': os.getenv('VERBOSE', 'false').lower() in TRUTHY,
        'debug': os.getenv('DEBUG', 'false').lower() in TRUTHY,
        'progress': _env_choice('PROGRESS', 'auto', ('auto', 'on', 'off')),
    }

    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, defaults)

    parser = argparse.ArgumentParser(
        prog='posetx',
        description='Downset counts, exponential functions and the unlabeled poset catalog'
    )
    commands = parser.add_subparsers(dest='command', required=True)

    info = commands.add_parser('info', parents=[common], help='Invariants of a poset file')
    info.add_argument('file', type=Path, help='Poset text file')

    downsets = commands.add_parser('downsets', parents=[common], help='Count or list downsets')
    downsets.add_argument('file', type=Path, help='Poset text file')
    downsets.add_argument('--list', action='store_true', help='List every downset as a bit mask')
    downsets.add_argument(
        '--algo',
        choices=['brute', 'split', 'antichain'],
        default='split',
        help='Counting algorithm: brute stream, minimal-point split, or antichain formula (default: split)'
    )

    expo = commands.add_parser('expo', parents=[common], help='Exponential function e(m, P)')
    expo.add_argument('file', type=Path, help='Poset text file')
    expo.add_argument('--m', type=int, default=None, help='Evaluate e(m, P) at this m')
    expo.add_argument('--sum', action='store_true', help='Print the exponential sum (default when --m is absent)')
    expo.add_argument('--verify', action='store_true', help='Cross-check against the oracles')
    expo.add_argument('--m-max', type=int, default=env_m_max, help=f'Largest m for --verify (default: {env_m_max})')

    catalog = commands.add_parser('catalog', help='Unlabeled poset catalog')
    actions = catalog.add_subparsers(dest='action', required=True)

    build = actions.add_parser('build', parents=[common], help='Enumerate classes and write the catalog file')
    build.add_argument('--max-k', type=int, default=env_max_k, help=f'Largest point count (default: {env_max_k})')
    build.add_argument('--out', type=Path, default=None, help='Catalog file (default: stdout)')

    verify = actions.add_parser('verify', parents=[common], help='Run every identity and table check')
    verify.add_argument('--max-k', type=int, default=env_max_k, help=f'Largest point count (default: {env_max_k})')
    verify.add_argument('--m-max', type=int, default=env_m_max, help=f'Largest m for matrix identities (default: {env_m_max})')
    verify.add_argument('--input', type=Path, default=None, help='Read the catalog from this file instead of enumerating')

    matrices = actions.add_parser('matrices', parents=[common], help='Representing matrices A, B, C, D, E')
    matrices.add_argument('--max-k', type=int, default=env_max_k, help=f'Largest point count (default: {env_max_k})')
    matrices.add_argument('--m-max', type=int, default=env_m_max, help=f'Largest m for E (default: {env_m_max})')
    matrices.add_argument('--input', type=Path, default=None, help='Read the catalog from this file')

    tables = actions.add_parser('tables', parents=[common], help='Aggregated exponential sums and p(k)')
    tables.add_argument('--max-k', type=int, default=env_max_k, help=f'Largest point count (default: {env_max_k})')
    tables.add_argument('--input', type=Path, default=None, help='Read the catalog from this file')

    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command-line arguments and load environment configuration.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        argparse.Namespace: Parsed arguments with additional attributes:
            - log_file: Path (log file path)
            - console_log_level: int (stderr threshold)
    """
    load_dotenv()
    env_log_file = os.getenv('LOG_FILE', './logs/posetx.log')

    parser = build_parser()
    args = parser.parse_args(argv)

    if args.threads < 1:
        logger.warning(f"--threads must be at least 1, got {args.threads}. Using 1.")
        args.threads = 1
    if args.budget < 1:
        parser.error(f"--budget must be positive, got {args.budget}")
    # above MAX_CATALOG_K the build itself raises BudgetExceeded
    for name in ('max_k', 'm_max', 'm'):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            parser.error(f"--{name.replace('_', '-')} must be nonnegative, got {value}")

    args.log_file = Path(env_log_file)
    if args.debug:
        args.console_log_level = logging.DEBUG
    elif args.verbose:
        args.console_log_level = logging.INFO
    else:
        args.console_log_level = logging.WARNING

    return args
