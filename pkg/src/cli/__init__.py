"""CLI interface"""
from src.cli.config import build_parser, parse_arguments

__all__ = ["build_parser", "parse_arguments"]
