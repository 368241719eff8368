"""
통계 계산 모듈

실험 평가에 필요한 통계량(변동계수, Hedges' g 효과크기, 상자그림 요약)을 계산하는
기능을 제공합니다.
"""

import itertools
import logging
from dataclasses import asdict, dataclass
from typing import Dict, Sequence

import numpy as np
import pandas as pd

from modules.exceptions import (
    DegenerateVarianceError,
    InsufficientDataError,
    ZeroMeanError
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupSummary:
    """상자그림용 다섯 수치 요약 + 평균/모집단 표준편차"""
    n: int
    mean: float
    std: float
    min: float
    q1: float
    median: float
    q3: float
    max: float


@dataclass(frozen=True)
class EffectSize:
    """Hedges' g 효과크기와 두 집단의 크기"""
    g: float
    n1: int
    n2: int


def _as_values(values: Sequence[float]) -> np.ndarray:
    return np.asarray(values, dtype=np.float64).ravel()


def coefficient_of_variation(values: Sequence[float]) -> float:
    """
    변동계수(CV)를 계산합니다.

    CV = 모집단 표준편차 / |평균|

    Args:
        values (Sequence[float]): 측정값 (2개 이상)

    Returns:
        float: 변동계수 (0 이상)

    Raises:
        InsufficientDataError: 값이 2개 미만일 때
        ZeroMeanError: 평균이 0일 때

    Examples:
        >>> round(coefficient_of_variation([1, 2, 3]), 4)
        0.4082
    """
    x = _as_values(values)
    if len(x) < 2:
        raise InsufficientDataError(f"변동계수는 2개 이상의 값이 필요합니다 (입력: {len(x)}개)")

    mean = x.mean()
    if mean == 0:
        raise ZeroMeanError("평균이 0이면 변동계수를 정의할 수 없습니다.")

    # 평균의 반올림 오차로 std가 0이 아니게 나오는 경우
    if np.ptp(x) == 0:
        return 0.0

    return float(x.std() / abs(mean))


def hedges_g(group1: Sequence[float], group2: Sequence[float]) -> EffectSize:
    """
    두 집단의 Hedges' g 효과크기를 계산합니다.

    g = J · (평균1 - 평균2) / s_pooled
    s_pooled는 표본분산의 자유도 가중 평균의 제곱근이며,
    소표본 보정 J = 1 - 3 / (4(n1 + n2) - 9) 입니다.

    Args:
        group1 (Sequence[float]): 첫 번째 집단 (2개 이상)
        group2 (Sequence[float]): 두 번째 집단 (2개 이상)

    Returns:
        EffectSize: g와 두 집단 크기

    Raises:
        InsufficientDataError: 어느 한 집단이 2개 미만일 때
        DegenerateVarianceError: 합동 분산이 0일 때

    Examples:
        >>> hedges_g([1, 2, 3], [1, 2, 3]).g
        0.0
    """
    x1, x2 = _as_values(group1), _as_values(group2)
    n1, n2 = len(x1), len(x2)
    if n1 < 2 or n2 < 2:
        raise InsufficientDataError(f"각 집단은 2개 이상의 값이 필요합니다 (n1={n1}, n2={n2})")

    pooled_var = ((n1 - 1) * x1.var(ddof=1) + (n2 - 1) * x2.var(ddof=1)) / (n1 + n2 - 2)
    if pooled_var == 0:
        raise DegenerateVarianceError("두 집단의 합동 분산이 0이어서 효과크기를 정의할 수 없습니다.")

    correction = 1 - 3 / (4 * (n1 + n2) - 9)
    g = correction * (x1.mean() - x2.mean()) / np.sqrt(pooled_var)
    return EffectSize(g=float(g), n1=n1, n2=n2)


def group_summary(values: Sequence[float]) -> GroupSummary:
    """
    상자그림 요약 통계를 계산합니다.

    사분위수는 순서통계량 사이 선형 보간(type 7, numpy 기본값)을 사용합니다.

    Raises:
        InsufficientDataError: 값이 없을 때

    Examples:
        >>> group_summary([1, 2, 3, 4]).median
        2.5
    """
    x = _as_values(values)
    if len(x) == 0:
        raise InsufficientDataError("요약할 값이 없습니다.")

    q1, median, q3 = np.percentile(x, [25, 50, 75])
    return GroupSummary(
        n=len(x),
        mean=float(x.mean()),
        std=float(x.std()),
        min=float(x.min()),
        q1=float(q1),
        median=float(median),
        q3=float(q3),
        max=float(x.max())
    )


def iqr_disjoint(first: GroupSummary, second: GroupSummary) -> bool:
    """두 집단의 사분위 범위 [q1, q3]가 겹치지 않으면 True"""
    return first.q3 < second.q1 or second.q3 < first.q1


def summaries_frame(groups: Dict[str, Sequence[float]]) -> pd.DataFrame:
    """
    집단별 요약 통계를 한 행씩 담은 DataFrame을 만듭니다.

    Returns:
        pd.DataFrame: group, n, mean, std, min, q1, median, q3, max 컬럼
    """
    rows = []
    for name in groups:
        row = {'group': name}
        row.update(asdict(group_summary(groups[name])))
        rows.append(row)
    return pd.DataFrame(rows, columns=['group'] + list(GroupSummary.__dataclass_fields__))


def pairwise_effect_sizes(groups: Dict[str, Sequence[float]], skip_undefined: bool = False) -> pd.DataFrame:
    """
    이름 순으로 정렬한 모든 집단 쌍의 Hedges' g를 계산합니다.

    Args:
        groups (Dict[str, Sequence[float]]): 집단 이름 → 값
        skip_undefined (bool): True면 효과크기를 정의할 수 없는 쌍을 경고 후 건너뜀

    Returns:
        pd.DataFrame: group1, group2, n1, n2, g 컬럼 (집단이 1개면 빈 표)
    """
    rows = []
    for first, second in itertools.combinations(sorted(groups), 2):
        try:
            effect = hedges_g(groups[first], groups[second])
        except (InsufficientDataError, DegenerateVarianceError) as e:
            if not skip_undefined:
                raise
            logger.warning("⚠️ %s vs %s: 효과크기를 계산할 수 없어 건너뜁니다 (%s)", first, second, e)
            continue
        rows.append({
            'group1': first,
            'group2': second,
            'n1': effect.n1,
            'n2': effect.n2,
            'g': effect.g
        })
    return pd.DataFrame(rows, columns=['group1', 'group2', 'n1', 'n2', 'g'])
