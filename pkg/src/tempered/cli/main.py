"""
Командная строка экспериментов

Подкоманды: dist, balls, bisector, approx-error, embed, calculus-check, models.
Результат печатается в CSV (по умолчанию) или JSON (--json) в stdout либо
в файл --out. Коды выхода: 0 - успех, 1 - ошибка использования,
2 - численная ошибка.
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from ..algebra import Temperature, log_t
from ..approximation import HistogramRecord, SmoothingConfig, relative_error_histogram
from ..calculus import (
    const_t_derivative_solution, straight_curve, t_derivative, t_geodesic_point, t_integral_numeric, t_length
)
from ..config import load_experiment_file, settings
from ..embedding import DatasetSpec, EmbedConfig, GeometryKind, compare_geometries
from ..errors import TemperedError
from ..geometry import ConvexDomain, sample_ball, sample_bisector, t_funk_cosimplex, t_funk_domain, t_hilbert_raw
from ..hypmodels import MODELS, fractional_sweep
from ..parameterization import CoSimplexPoint
from ..utils import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2


class UsageError(Exception):
    """Ошибка разбора аргументов"""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser, не завершающий процесс при ошибке"""

    def error(self, message: str):
        self.print_help(sys.stderr)
        raise UsageError(message)


def _floats(text: str) -> List[float]:
    """Разобрать список десятичных чисел через запятую"""
    try:
        return [float(item) for item in str(text).split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"ожидается список чисел через запятую, получено '{text}'")


def _ints(text: str) -> List[int]:
    try:
        return [int(item) for item in str(text).split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"ожидается список целых через запятую, получено '{text}'")


def build_parser() -> argparse.ArgumentParser:
    """Парсер со всеми подкомандами"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--t', type=_floats, default=None, help='Температура (или список через запятую)')
    common.add_argument('--seed', type=int, default=None, help='Зерно генератора')
    common.add_argument('--out', nargs='?', const='', default=None,
                        help='Файл результата (по умолчанию stdout; без значения - каталог вывода из настроек)')
    common.add_argument('--json', action='store_true', help='JSON вместо CSV')
    common.add_argument('--config', default=None, help='Файл key=value с параметрами эксперимента')

    parser = _Parser(prog='tempered', description='Эксперименты с темперированными мерами и t-геометрией')
    sub = parser.add_subparsers(dest='command', metavar='command', parser_class=_Parser)
    sub.required = True

    dist = sub.add_parser('dist', parents=[common], help='t-Гильберт и t-Функ между двумя мерами')
    dist.add_argument('--p', type=_floats, required=True)
    dist.add_argument('--q', type=_floats, required=True)
    dist.add_argument('--raw', action='store_true', help='Проективный режим на положительных векторах')

    balls = sub.add_parser('balls', parents=[common], help='Узлы сетки внутри шаров на симплексе')
    balls.add_argument('--p', type=_floats, required=True, help='Центр (d = 3)')
    balls.add_argument('--radius-list', type=_floats, default=None)
    balls.add_argument('--grid', type=int, default=None)
    balls.add_argument('--which', choices=['t-HG', 't-NH', 't-dHG'], default='t-HG')
    balls.add_argument('--T', type=float, default=None)

    bisector = sub.add_parser('bisector', parents=[common], help='Бисектриса и область t-равенства')
    bisector.add_argument('--p', type=_floats, required=True)
    bisector.add_argument('--q', type=_floats, required=True)
    bisector.add_argument('--grid', type=int, default=None)

    approx = sub.add_parser('approx-error', parents=[common], help='Гистограмма относительной ошибки')
    approx.add_argument('--T', type=float, default=None)
    approx.add_argument('--delta', type=float, default=None)
    approx.add_argument('--d', type=int, default=None, help='Размерность (8)')
    approx.add_argument('--n', type=int, default=10000, help='Число пар')
    approx.add_argument('--workers', type=int, default=None)

    embed = sub.add_parser('embed', parents=[common], help='Сравнение геометрий вложения')
    embed.add_argument('--dataset', choices=['points', 'er', 'ba'], default='points')
    embed.add_argument('--n', type=int, default=50)
    embed.add_argument('--p', type=float, default=0.5, help='Вероятность ребра (er)')
    embed.add_argument('--m', type=int, default=2, help='Ребер на вершину (ba)')
    embed.add_argument('--dims', type=_ints, default=None, help='Размерности карт (2,3)')
    embed.add_argument('--iterations', type=int, default=500)
    embed.add_argument('--lr', type=float, default=0.05)
    embed.add_argument('--T', type=float, default=None)
    embed.add_argument('--normalize', action='store_true')

    calc = sub.add_parser('calculus-check', parents=[common], help='Проверки t-исчисления')
    calc.add_argument('--n', type=int, default=10000, help='Число ячеек t-интеграла')

    models = sub.add_parser('models', parents=[common], help='Дробные точки в t-моделях Клейна/Пуанкаре')
    models.add_argument('--r', type=_floats, default=[0.0, 0.0])
    models.add_argument('--s', type=_floats, default=[0.6, 0.5])
    models.add_argument('--alphas', type=_floats, default=[0.2])
    models.add_argument('--model', choices=list(MODELS), default='klein')

    return parser


def _apply_config_file(args: argparse.Namespace) -> None:
    """Значения из --config заполняют флаги, не заданные в командной строке"""
    values = load_experiment_file(args.config)
    casts: Dict[str, Callable[[str], Any]] = {
        't': _floats, 'seed': int, 'grid': int, 'T': float, 'delta': float, 'd': int, 'workers': int,
        'radius_list': _floats, 'dims': _ints,
    }
    for key, raw in values.items():
        name = 'T' if key == 'smoothing_t' else key
        if name in casts and getattr(args, name, None) is None:
            setattr(args, name, casts[name](raw))


def _single_t(args: argparse.Namespace, default: float = 1.0) -> Temperature:
    ts = args.t or [default]
    if len(ts) != 1:
        raise UsageError(f"подкоманда {args.command} принимает одну температуру, получено {ts}")
    return Temperature(ts[0])


def _seed(args: argparse.Namespace) -> int:
    return 0 if args.seed is None else args.seed


def run_dist(args: argparse.Namespace) -> pd.DataFrame:
    temp = _single_t(args)
    if args.raw:
        row = {'t': temp.t, 't_hilbert': t_hilbert_raw(args.p, args.q, temp)}
    else:
        p_tilde = CoSimplexPoint.from_measure(args.p, temp)
        q_tilde = CoSimplexPoint.from_measure(args.q, temp)
        row = {
            't': temp.t,
            't_hilbert': t_hilbert_raw(p_tilde.values, q_tilde.values, temp),
            't_funk_pq': t_funk_cosimplex(p_tilde, q_tilde),
            't_funk_qp': t_funk_cosimplex(q_tilde, p_tilde),
        }
    return pd.DataFrame([row])


def run_balls(args: argparse.Namespace) -> pd.DataFrame:
    temp = _single_t(args)
    if not args.radius_list:
        raise UsageError("подкоманда balls требует --radius-list")
    center = CoSimplexPoint.from_measure(args.p, temp)
    frames = []
    for radius in args.radius_list:
        frame = sample_ball(center, radius, args.grid, temp, args.which, args.T)
        frame.insert(0, 'radius', radius)
        frame.insert(0, 'which', args.which)
        frame.insert(0, 't', temp.t)
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


def run_bisector(args: argparse.Namespace) -> pd.DataFrame:
    temp = _single_t(args)
    bisector, equality = sample_bisector(
        CoSimplexPoint.from_measure(args.p, temp), CoSimplexPoint.from_measure(args.q, temp), args.grid
    )
    bisector.insert(0, 'region', 'bisector')
    equality.insert(0, 'region', 'equality')
    frame = pd.concat([bisector, equality], ignore_index=True)
    frame.insert(0, 't', temp.t)
    return frame


def run_approx_error(args: argparse.Namespace) -> HistogramRecord:
    temp = _single_t(args)
    cfg = SmoothingConfig(
        T=args.T if args.T is not None else settings.smoothing_T,
        delta=args.delta if args.delta is not None else 0.0,
    )
    return relative_error_histogram(args.n, args.d or 8, temp, cfg, seed=_seed(args), workers=args.workers)


def run_embed(args: argparse.Namespace) -> pd.DataFrame:
    temp = _single_t(args, default=0.5)
    spec = DatasetSpec(source=args.dataset, n=args.n, p=args.p, m=args.m)
    kinds = [
        GeometryKind('euclidean'),
        GeometryKind('hyperboloid'),
        GeometryKind('hilbert_simplex'),
        GeometryKind('t_hilbert', temp.t),
    ]
    config = EmbedConfig(
        lr=args.lr,
        iterations=args.iterations,
        T=args.T if args.T is not None else settings.smoothing_T,
        normalize=args.normalize,
    )
    return compare_geometries(spec, args.dims or [2, 3], kinds, config, seed=_seed(args))


def run_calculus_check(args: argparse.Namespace) -> pd.DataFrame:
    temp = _single_t(args)
    simplex = ConvexDomain.simplex(3)
    r = np.array([0.2, 0.3, 0.5])
    s = np.array([0.5, 0.3, 0.2])
    K = 0.7
    tau = 0.3

    checks = [
        ('t_derivative_log_t', t_derivative(lambda x: log_t(x, temp), 2.0, temp), 0.5),
        ('const_t_derivative', t_derivative(const_t_derivative_solution(K, temp), 0.5, temp), K),
        ('t_integral_inverse', t_integral_numeric(lambda x: 1.0 / x, 1.0, 2.0, temp, args.n), float(log_t(2.0, temp))),
        ('t_length_ray', t_length(simplex, straight_curve(r, s), temp, args.n), t_funk_domain(simplex, r, s, temp)),
        ('t_geodesic_unit_speed', t_funk_domain(simplex, r, t_geodesic_point(simplex, r, s - r, tau, temp), temp), tau),
    ]
    rows = [
        {'t': temp.t, 'check': name, 'value': value, 'expected': expected, 'abs_error': abs(value - expected)}
        for name, value, expected in checks
    ]
    return pd.DataFrame(rows)


def run_models(args: argparse.Namespace) -> pd.DataFrame:
    ts = args.t or [0.8, 1.0, 1.2]
    return fractional_sweep(args.r, args.s, args.alphas, ts, args.model)


Result = Union[pd.DataFrame, HistogramRecord]

COMMANDS: Dict[str, Callable[[argparse.Namespace], Result]] = {
    'dist': run_dist,
    'balls': run_balls,
    'bisector': run_bisector,
    'approx-error': run_approx_error,
    'embed': run_embed,
    'calculus-check': run_calculus_check,
    'models': run_models,
}


def _render(result: Result, as_json: bool) -> str:
    """CSV таблицы; гистограмма в JSON - одна запись {t, T, delta, d, bins, counts, mean, sd}"""
    if isinstance(result, HistogramRecord):
        if as_json:
            return result.to_json() + '\n'
        result = result.to_frame()
    if as_json:
        return json.dumps(result.to_dict(orient='records')) + '\n'
    return result.to_csv(index=False)


def _output_path(args: argparse.Namespace) -> str:
    """Путь --out как задан; пустой --out дает <каталог вывода>/<подкоманда>.csv|json"""
    if args.out:
        return args.out
    extension = 'json' if args.json else 'csv'
    return os.path.join(settings.output_dir, f"{args.command}.{extension}")


def emit(result: Result, args: argparse.Namespace) -> None:
    text = _render(result, args.json)
    if args.out is None:
        sys.stdout.write(text)
        return
    path = _output_path(args)
    os.makedirs(os.path.dirname(path) or '.', exist_ok=True)
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(text)
    logger.info(f"✅ Результат записан в {path}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Разобрать аргументы и выполнить подкоманду

    Args:
        argv: Аргументы без имени программы (по умолчанию sys.argv[1:])

    Returns:
        Код выхода
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        _apply_config_file(args)
        result = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"❌ Ошибка использования: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except TemperedError as e:
        logger.error(f"❌ Численная ошибка: {e}")
        print(f"❌ Численная ошибка: {e}", file=sys.stderr)
        return EXIT_NUMERIC

    emit(result, args)
    return EXIT_OK


def main() -> None:
    setup_logging(stream=sys.stderr)
    sys.exit(run())


if __name__ == '__main__':
    main()
