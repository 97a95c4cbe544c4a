"""
Командная строка экспериментов
"""

from .main import COMMANDS, EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, build_parser, run, main

__all__ = ['COMMANDS', 'EXIT_OK', 'EXIT_USAGE', 'EXIT_NUMERIC', 'build_parser', 'run', 'main']
