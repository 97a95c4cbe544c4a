"""
Модульные тесты пакета tempered
"""
