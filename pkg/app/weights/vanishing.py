"""
Vanishing bounds for cohomology of primitive local systems and the Leray
pieces of a fiber power.

r(g, i, l) is the largest q >= 0 with q(g - l) + q(q + 1)/2 <= i. The group in
degree i with coefficients of primitive degree l vanishes while 2r + i < l and
is pure of weight (i + l)/2 when 2r + i == l.
"""
from itertools import product
from math import isqrt
from typing import Optional
import logging

import numpy as np
import pandas as pd

from app.core.exceptions import UsageError
from app.weights.representation import decompose_power

logger = logging.getLogger(__name__)

LERAY_COLUMNS = [
    'base_degree', 'alpha', 'fiber_degree', 'weight', 'multiplicity', 'twist',
    'vanishes', 'pure', 'status',
]


def _check_range(g: int, i: int, l: int) -> None:
    if g < 1 or i < 0 or not 0 <= l <= g:
        raise UsageError(f"need g >= 1, i >= 0 and 0 <= l <= g, got g={g}, i={i}, l={l}")


def _q_candidates(i_max: int) -> np.ndarray:
    # q(q+1)/2 <= i forces q <= sqrt(2i)
    return np.arange(0, isqrt(2 * i_max) + 2)


def fakhruddin_r(g: int, i: int, l: int) -> int:
    _check_range(g, i, l)
    q = _q_candidates(i)
    admissible = q * (g - l) + q * (q + 1) // 2 <= i
    return int(q[admissible].max())


def vanishes(g: int, i: int, l: int) -> bool:
    return 2 * fakhruddin_r(g, i, l) + i < l


def is_pure(g: int, i: int, l: int) -> bool:
    return 2 * fakhruddin_r(g, i, l) + i == l


def first_nonvanishing(g: int, l: int) -> int:
    _check_range(g, 0, l)
    # degree l never vanishes
    return next(i for i in range(l + 1) if not vanishes(g, i, l))


def fakhruddin_grid(g_max: int, i_max: int, l_max: int) -> pd.DataFrame:
    """
    r, vanishing and purity over 1 <= g <= g_max, 0 <= i <= i_max,
    0 <= l <= min(l_max, g)
    """
    if g_max < 1 or i_max < 0 or l_max < 0:
        raise UsageError("grid bounds must be nonnegative with g_max >= 1")
    g, i, l = np.meshgrid(
        np.arange(1, g_max + 1), np.arange(0, i_max + 1), np.arange(0, l_max + 1), indexing="ij"
    )
    g, i, l = g.ravel(), i.ravel(), l.ravel()
    keep = l <= g
    g, i, l = g[keep], i[keep], l[keep]

    q = _q_candidates(i_max)[:, None]
    admissible = q * (g - l) + q * (q + 1) // 2 <= i
    # admissible q form an initial segment because g - l >= 0
    r = admissible.sum(axis=0) - 1
    frame = pd.DataFrame({'g': g, 'i': i, 'l': l, 'r': r})
    frame['vanishes'] = 2 * frame['r'] + frame['i'] < frame['l']
    frame['pure'] = 2 * frame['r'] + frame['i'] == frame['l']
    return frame.sort_values(['g', 'l', 'i']).reset_index(drop=True)


def first_nonvanishing_table(g_max: int, l_max: int) -> pd.DataFrame:
    frame = fakhruddin_grid(g_max, l_max, l_max)
    frame = frame[~frame['vanishes']]
    table = frame.groupby(['g', 'l'], as_index=False)['i'].min()
    return table.rename(columns={'i': 'first_nonvanishing'})


def leray_pieces(g: int, n: int, k: int, base_dim: Optional[int] = None) -> pd.DataFrame:
    """
    Pieces H^i(base, R^alpha_1 x ... x R^alpha_n) of total degree k, the
    R^1 block split into irreducible local systems
    """
    if g < 1 or n < 1 or k < 0:
        raise UsageError(f"need g >= 1, n >= 1 and k >= 0, got g={g}, n={n}, k={k}")
    base_dim = 3 * g - 3 if base_dim is None else base_dim
    rows = []
    for i in range(0, min(k, 2 * base_dim) + 1):
        fiber = k - i
        for alpha in product((0, 1, 2), repeat=n):
            if sum(alpha) != fiber:
                continue
            ones, twos = alpha.count(1), alpha.count(2)
            if ones > g:
                rows.append({
                    'base_degree': i, 'alpha': alpha, 'fiber_degree': fiber, 'weight': None,
                    'multiplicity': None, 'twist': None, 'vanishes': None, 'pure': None,
                    'status': "refused"
                })
                continue
            table = decompose_power(ones, g)
            for weight, multiplicity in sorted(table.multiplicities.items(), reverse=True):
                rows.append({
                    'base_degree': i,
                    'alpha': alpha,
                    'fiber_degree': fiber,
                    'weight': weight.partition,
                    'multiplicity': multiplicity,
                    'twist': twos + table.twist(weight),
                    'vanishes': vanishes(g, i, weight.size),
                    'pure': is_pure(g, i, weight.size),
                    'status': "ok"
                })
    logger.info(f"{len(rows)} Leray pieces for g={g}, n={n}, k={k}")
    return pd.DataFrame(rows, columns=LERAY_COLUMNS)
