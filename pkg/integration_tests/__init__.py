"""
Приемочные тесты t-геометрии на больших выборках
Запускаются отдельно от модульных тестов: python integration_tests/run_all_tests.py
"""
