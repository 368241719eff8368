"""
GradEn 계산 모듈

이미지의 2×2 픽셀 블록마다 가로/세로/대각 기울기를 구하고, 전체 기울기를 하나의
집단으로 z-점수 표준화한 뒤 5개 기호로 양자화하여 125개 패턴의 정규화
섀넌 엔트로피(GradEn)를 계산합니다.
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from modules.config import get_config
from modules.exceptions import (
    ImageTooSmallError,
    NonFiniteInputError,
    ParameterRangeError
)


N_SYMBOLS = 5
N_PATTERNS = N_SYMBOLS ** 3  # 125
SYMBOLS = (-2, -1, 0, 1, 2)

# 패턴 인덱스 = (s_h+2)*25 + (s_v+2)*5 + (s_d+2)
_PATTERN_WEIGHTS = np.array([25, 5, 1], dtype=np.int64)


@dataclass(frozen=True)
class GradientField:
    """
    2×2 블록별 기울기 벡터 집합

    Attributes:
        vectors (np.ndarray): (H-1, W-1, 3) 배열, 마지막 축은 (가로, 세로, 대각)
        standardized (bool): z-점수 표준화 여부
    """
    vectors: np.ndarray
    standardized: bool = False

    @property
    def rows(self) -> int:
        return self.vectors.shape[0]

    @property
    def cols(self) -> int:
        return self.vectors.shape[1]


@dataclass(frozen=True)
class Thresholds:
    """
    기호화 임계값 (δ, γ)

    quantile_a, quantile_b는 정규분포 분위수로부터 만들었을 때만 채워집니다.
    """
    delta: float
    gamma: float
    quantile_a: Optional[float] = None
    quantile_b: Optional[float] = None

    def __post_init__(self):
        if not (math.isfinite(self.delta) and math.isfinite(self.gamma)):
            raise ParameterRangeError(f"임계값은 유한한 실수여야 합니다: δ={self.delta}, γ={self.gamma}")
        if not 0 <= self.delta < self.gamma:
            raise ParameterRangeError(
                f"임계값은 0 ≤ δ < γ 를 만족해야 합니다: δ={self.delta}, γ={self.gamma}"
            )


@dataclass
class PatternHistogram:
    """
    125개 기울기 패턴의 빈도

    Attributes:
        counts (np.ndarray): 길이 125의 정수 배열 (패턴 인덱스 순서)
    """
    counts: np.ndarray = field(default_factory=lambda: np.zeros(N_PATTERNS, dtype=np.int64))

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def probabilities(self) -> np.ndarray:
        return self.counts / self.total

    def to_list(self) -> List[int]:
        """JSON 직렬화용 125개 정수 리스트"""
        return [int(c) for c in self.counts]


def as_gray_image(data) -> np.ndarray:
    """
    입력을 검증하여 float64 2차원 배열로 변환합니다.

    Args:
        data: H×W 형태의 배열 또는 중첩 리스트

    Returns:
        np.ndarray: (H, W) float64 배열

    Raises:
        ImageTooSmallError: 2차원이 아니거나 H < 2 또는 W < 2 일 때
        NonFiniteInputError: NaN/Inf가 포함되어 있을 때
    """
    image = np.asarray(data, dtype=np.float64)
    if image.ndim != 2:
        raise ImageTooSmallError(f"2차원 이미지가 필요합니다 (입력 차원: {image.ndim})")
    height, width = image.shape
    if height < 2 or width < 2:
        raise ImageTooSmallError(f"이미지는 최소 2×2 이어야 합니다 (입력: {height}×{width})")
    if not np.isfinite(image).all():
        raise NonFiniteInputError("이미지에 NaN 또는 Inf 값이 포함되어 있습니다.")
    return image


def compute_gradients(image) -> GradientField:
    """
    각 2×2 블록의 가로/세로/대각 기울기를 계산합니다.

    Args:
        image: H×W 그레이 이미지

    Returns:
        GradientField: (H-1)×(W-1)개의 (g_h, g_v, g_d), 표준화되지 않은 상태

    Examples:
        >>> compute_gradients([[1, 2], [3, 5]]).vectors[0, 0]
        array([1., 2., 4.])
    """
    x = as_gray_image(image)
    origin = x[:-1, :-1]
    horizontal = x[:-1, 1:] - origin
    vertical = x[1:, :-1] - origin
    diagonal = x[1:, 1:] - origin
    return GradientField(np.stack([horizontal, vertical, diagonal], axis=-1), standardized=False)


def standardize(gradient_field: GradientField) -> GradientField:
    """
    모든 방향의 기울기를 하나의 집단으로 묶어 z-점수 표준화합니다.

    모집단 표준편차(n으로 나눔)를 사용합니다. 표준편차가 0이면(상수 이미지)
    모든 성분을 0으로 둡니다.

    Args:
        gradient_field (GradientField): 표준화되지 않은 기울기

    Returns:
        GradientField: 표준화된 기울기

    Raises:
        ParameterRangeError: 이미 표준화된 기울기를 넣었을 때
    """
    if gradient_field.standardized:
        raise ParameterRangeError("이미 표준화된 기울기입니다.")

    vectors = gradient_field.vectors
    pooled = vectors.reshape(-1)
    mean = pooled.mean()
    std = pooled.std()

    if std == 0:
        return GradientField(np.zeros_like(vectors), standardized=True)

    return GradientField((vectors - mean) / std, standardized=True)


def quantile_thresholds(a: Optional[float] = None, b: Optional[float] = None) -> Thresholds:
    """
    정규분포 분위수 수준 (a, b)로부터 임계값 δ=Φ⁻¹(a), γ=Φ⁻¹(b)를 만듭니다.

    Args:
        a (float): δ의 분위수 수준, 0.5 < a < 0.75 (기본값: 0.55)
        b (float): γ의 분위수 수준, 0.75 < b < 1 (기본값: 0.8)

    Returns:
        Thresholds: 분위수 정보가 포함된 임계값

    Raises:
        ParameterRangeError: a 또는 b가 열린 구간을 벗어났을 때

    Examples:
        >>> t = quantile_thresholds(0.55, 0.8)
        >>> round(t.delta, 5), round(t.gamma, 5)
        (0.12566, 0.84162)
    """
    a = get_config('graden.a', 0.55) if a is None else float(a)
    b = get_config('graden.b', 0.8) if b is None else float(b)

    if not 0.5 < a < 0.75:
        raise ParameterRangeError(f"분위수 수준 a는 (0.5, 0.75) 범위여야 합니다: a={a}")
    if not 0.75 < b < 1:
        raise ParameterRangeError(f"분위수 수준 b는 (0.75, 1) 범위여야 합니다: b={b}")

    return Thresholds(
        delta=float(stats.norm.ppf(a)),
        gamma=float(stats.norm.ppf(b)),
        quantile_a=a,
        quantile_b=b
    )


def thresholds_from_config(
    a: Optional[float] = None,
    b: Optional[float] = None,
    delta: Optional[float] = None,
    gamma: Optional[float] = None
) -> Thresholds:
    """
    분위수 수준 또는 직접 지정한 (δ, γ)로 임계값을 만듭니다.

    δ, γ를 직접 지정하면 분위수 범위 제약을 거치지 않습니다 (0 ≤ δ < γ 만 검사).

    Raises:
        ParameterRangeError: δ와 γ 중 하나만 지정했을 때
    """
    if delta is None and gamma is None:
        return quantile_thresholds(a, b)
    if delta is None or gamma is None:
        raise ParameterRangeError("δ(--delta)와 γ(--gamma)는 함께 지정해야 합니다.")
    return Thresholds(delta=float(delta), gamma=float(gamma))


def symbolize(value: float, thresholds: Thresholds) -> int:
    """
    표준화된 기울기 하나를 {-2, -1, 0, 1, 2} 기호로 변환합니다.

    각 구간은 왼쪽 열림, 오른쪽 닫힘입니다.

    Examples:
        >>> t = quantile_thresholds(0.55, 0.8)
        >>> symbolize(-0.9, t), symbolize(0.0, t), symbolize(0.5, t)
        (-2, 0, 1)
    """
    delta, gamma = thresholds.delta, thresholds.gamma

    if value <= -gamma:
        return -2
    elif value <= -delta:
        return -1
    elif value <= delta:
        return 0
    elif value <= gamma:
        return 1
    else:
        return 2


def symbolize_array(values, thresholds: Thresholds) -> np.ndarray:
    """symbolize의 배열 버전 (경계 처리 동일)"""
    edges = np.array([-thresholds.gamma, -thresholds.delta, thresholds.delta, thresholds.gamma])
    return np.searchsorted(edges, np.asarray(values), side='left').astype(np.int64) - 2


def pattern_index(triple: Sequence[int]) -> int:
    """기호 3개 (s_h, s_v, s_d)를 0~124 패턴 인덱스로 변환합니다."""
    s_h, s_v, s_d = triple
    return (s_h + 2) * 25 + (s_v + 2) * 5 + (s_d + 2)


def pattern_from_index(index: int) -> Tuple[int, int, int]:
    """pattern_index의 역변환"""
    if not 0 <= index < N_PATTERNS:
        raise ParameterRangeError(f"패턴 인덱스는 0~124 범위여야 합니다: {index}")
    return (index // 25 - 2, (index // 5) % 5 - 2, index % 5 - 2)


def pattern_histogram(gradient_field: GradientField, thresholds: Thresholds) -> PatternHistogram:
    """
    표준화된 기울기를 기호화하여 125개 패턴의 빈도를 셉니다.

    Raises:
        ParameterRangeError: 표준화되지 않은 기울기를 넣었을 때
    """
    if not gradient_field.standardized:
        raise ParameterRangeError("패턴 빈도는 표준화된 기울기에서만 계산합니다.")

    symbols = symbolize_array(gradient_field.vectors, thresholds) + 2
    indices = symbols @ _PATTERN_WEIGHTS
    counts = np.bincount(indices.ravel(), minlength=N_PATTERNS).astype(np.int64)
    return PatternHistogram(counts)


def normalized_entropy(counts, n_states: int) -> float:
    """
    빈도 배열의 섀넌 엔트로피를 log(n_states)로 나누어 0~1로 정규화합니다.

    0·log0 은 0으로 처리합니다. 로그의 밑은 분자/분모에서 상쇄됩니다.
    """
    counts = np.asarray(counts, dtype=np.float64)
    if counts.sum() <= 0:
        return 0.0
    # 단일 패턴이면 scipy가 -0.0을 돌려줌
    return abs(float(stats.entropy(counts[counts > 0], base=n_states)))


def graden_from_histogram(histogram: PatternHistogram) -> float:
    """패턴 빈도로부터 GradEn 값을 계산합니다."""
    return normalized_entropy(histogram.counts, N_PATTERNS)


def graden_histogram(image, thresholds: Optional[Thresholds] = None) -> PatternHistogram:
    """이미지 하나에 대해 기울기 → 표준화 → 패턴 빈도까지 수행합니다."""
    if thresholds is None:
        thresholds = quantile_thresholds()
    return pattern_histogram(standardize(compute_gradients(image)), thresholds)


def graden(image, thresholds: Optional[Thresholds] = None) -> float:
    """
    이미지의 GradEn(Gradient Entropy)을 계산합니다.

    Args:
        image: H×W 그레이 이미지 (H, W ≥ 2)
        thresholds (Optional[Thresholds]): 기호화 임계값 (기본값: a=0.55, b=0.8)

    Returns:
        float: 0~1 사이의 GradEn 값

    Examples:
        >>> graden(np.full((10, 10), 7.0))
        0.0
    """
    return graden_from_histogram(graden_histogram(image, thresholds))
