"""
Скрипт для запуска экспериментов из командной строки

Пример:
    python run_cli.py dist --t 1.5 --p 0.25,0.25 --q 0.01,0.81
"""

import os
import sys

# Добавляем src в путь
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from tempered.cli import main

if __name__ == "__main__":
    main()
