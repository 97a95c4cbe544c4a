"""
Запуск командной строки: python -m tempered
"""

from .cli import main

main()
