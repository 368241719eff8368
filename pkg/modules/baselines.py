"""
비교 측정법 모듈

2차원 표본 엔트로피(SampEn2D), 2차원 분포 엔트로피(DistrEn2D),
2차원 순열 엔트로피(PerEn2D)를 원래 정의대로 계산합니다.
모든 창(window)은 가로/세로 1칸씩 이동하며, 창 사이 거리는 체비셰프 거리입니다.
"""

import itertools
import math
from typing import Iterator, Optional

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from modules.config import get_config
from modules.exceptions import (
    ImageTooSmallError,
    ParameterRangeError,
    UndefinedEntropyError
)
from modules.graden import as_gray_image, normalized_entropy


N_ORDINAL_PATTERNS = 24

# argsort 결과(길이 4 순열)를 4진수 코드로 만든 뒤 사전식 순열 번호로 바꾸는 표
_ORDINAL_LOOKUP = np.full(4 ** 4, -1, dtype=np.int64)
for _rank, _perm in enumerate(itertools.permutations(range(4))):
    _ORDINAL_LOOKUP[_perm[0] * 64 + _perm[1] * 16 + _perm[2] * 4 + _perm[3]] = _rank
_ORDINAL_WEIGHTS = np.array([64, 16, 4, 1], dtype=np.int64)

_PAIR_CHUNK = 2_000_000


def _check_window(image: np.ndarray, m: int) -> None:
    if m < 1:
        raise ParameterRangeError(f"창 크기 m은 1 이상이어야 합니다: m={m}")
    height, width = image.shape
    if height <= m or width <= m:
        raise ImageTooSmallError(
            f"이미지 크기({height}×{width})가 창 크기 m={m}보다 커야 합니다."
        )


def _flat_windows(image: np.ndarray, size: int) -> np.ndarray:
    """size×size 창을 모든 위치에서 행 우선으로 펼친 (행 위치, 열 위치, size²) 배열"""
    view = sliding_window_view(image, (size, size))
    return view.reshape(view.shape[0], view.shape[1], size * size)


def _chebyshev_chunks(windows: np.ndarray) -> Iterator[np.ndarray]:
    """
    서로 다른 모든 창 쌍(i < j)의 체비셰프 거리를 묶음 단위로 내보냅니다.

    메모리 사용량은 묶음 크기로 제한됩니다.
    """
    buffer = []
    buffered = 0
    for i in range(len(windows) - 1):
        distances = np.max(np.abs(windows[i + 1:] - windows[i]), axis=1)
        buffer.append(distances)
        buffered += len(distances)
        if buffered >= _PAIR_CHUNK:
            yield np.concatenate(buffer)
            buffer, buffered = [], 0
    if buffer:
        yield np.concatenate(buffer)


def sampen2d(
    image,
    m: Optional[int] = None,
    r: Optional[float] = None,
    on_undefined: str = 'raise'
) -> float:
    """
    2차원 표본 엔트로피(SampEn2D)를 계산합니다.

    (m+1)×(m+1) 창이 들어가는 (H-m)×(W-m)개 위치에서, m×m 창 쌍 중 거리가
    r·std 이하인 쌍의 수 B와 (m+1)×(m+1) 창 쌍의 수 A를 세어 -log(A/B)를 구합니다.
    자기 자신과의 비교는 제외합니다.

    Args:
        image: H×W 그레이 이미지 (H, W > m)
        m (int): 창 한 변의 길이 (기본값: 2)
        r (float): 허용 오차, 이미지 모집단 표준편차 대비 비율 (기본값: 0.2)
        on_undefined (str): A 또는 B가 0일 때 'raise'면 예외, 'nan'이면 NaN 반환

    Returns:
        float: SampEn2D 값 (0 이상)

    Raises:
        UndefinedEntropyError: 일치 쌍이 없고 on_undefined='raise'일 때

    Examples:
        >>> sampen2d(np.ones((6, 6)), m=1)
        0.0
    """
    m = int(get_config('sampen2d.m', 2) if m is None else m)
    r = float(get_config('sampen2d.r', 0.2) if r is None else r)
    if on_undefined not in ('raise', 'nan'):
        raise ParameterRangeError(f"on_undefined는 'raise' 또는 'nan'이어야 합니다: {on_undefined}")
    if r <= 0:
        raise ParameterRangeError(f"허용 오차 r은 0보다 커야 합니다: r={r}")

    x = as_gray_image(image)
    _check_window(x, m)

    tolerance = r * x.std()
    n_rows, n_cols = x.shape[0] - m, x.shape[1] - m
    windows_m = _flat_windows(x, m)[:n_rows, :n_cols].reshape(-1, m * m)
    windows_m1 = _flat_windows(x, m + 1).reshape(-1, (m + 1) ** 2)

    matches_m = 0
    matches_m1 = 0
    for i in range(len(windows_m) - 1):
        close = np.max(np.abs(windows_m[i + 1:] - windows_m[i]), axis=1) <= tolerance
        n_close = int(np.count_nonzero(close))
        if n_close == 0:
            continue
        matches_m += n_close
        # m+1 창은 m 창을 포함하므로 m에서 일치한 쌍만 확인
        candidates = windows_m1[i + 1:][close]
        matches_m1 += int(np.count_nonzero(np.max(np.abs(candidates - windows_m1[i]), axis=1) <= tolerance))

    if matches_m == 0 or matches_m1 == 0:
        if on_undefined == 'nan':
            return float('nan')
        raise UndefinedEntropyError(
            f"SampEn2D가 정의되지 않습니다 (A={matches_m1}, B={matches_m}, m={m}, r={r})"
        )

    return math.log(matches_m / matches_m1)


def distren2d(image, m: Optional[int] = None, bins: Optional[int] = None) -> float:
    """
    2차원 분포 엔트로피(DistrEn2D)를 계산합니다.

    모든 m×m 창 쌍의 체비셰프 거리를 [0, 최대거리] 구간의 등간격 bins개
    히스토그램으로 만든 뒤 log(bins)로 정규화한 섀넌 엔트로피를 구합니다.

    Args:
        image: H×W 그레이 이미지 (H, W > m)
        m (int): 창 한 변의 길이 (기본값: 2)
        bins (int): 히스토그램 구간 수 M (기본값: 128)

    Returns:
        float: 0~1 사이의 DistrEn2D 값
    """
    m = int(get_config('distren2d.m', 2) if m is None else m)
    bins = int(get_config('distren2d.bins', 128) if bins is None else bins)
    if bins < 2:
        raise ParameterRangeError(f"구간 수 M은 2 이상이어야 합니다: M={bins}")

    x = as_gray_image(image)
    _check_window(x, m)
    windows = _flat_windows(x, m).reshape(-1, m * m)

    # 쌍 거리의 최댓값 = 창 원소 위치별 (최댓값 - 최솟값)의 최댓값
    max_distance = float(np.ptp(windows, axis=0).max())

    if max_distance == 0:
        return 0.0

    counts = np.zeros(bins, dtype=np.int64)
    for chunk in _chebyshev_chunks(windows):
        chunk_counts, _ = np.histogram(chunk, bins=bins, range=(0.0, max_distance))
        counts += chunk_counts

    return normalized_entropy(counts, bins)


def ordinal_pattern_counts(image) -> np.ndarray:
    """
    모든 2×2 블록의 순서 패턴 빈도를 셉니다.

    블록은 행 우선으로 펼치고, 같은 값은 먼저 나온 원소가 앞서도록(안정 정렬)
    순위를 매깁니다.

    Returns:
        np.ndarray: 사전식 순열 순서의 길이 24 정수 배열
    """
    x = as_gray_image(image)
    blocks = _flat_windows(x, 2).reshape(-1, 4)
    permutations = np.argsort(blocks, axis=1, kind='stable')
    codes = permutations @ _ORDINAL_WEIGHTS
    return np.bincount(_ORDINAL_LOOKUP[codes], minlength=N_ORDINAL_PATTERNS).astype(np.int64)


def peren2d(image) -> float:
    """
    2차원 순열 엔트로피(PerEn2D)를 계산합니다.

    Returns:
        float: log(24)로 정규화한 0~1 사이 값

    Examples:
        >>> peren2d(np.arange(16.0).reshape(4, 4))
        0.0
    """
    return normalized_entropy(ordinal_pattern_counts(image), N_ORDINAL_PATTERNS)
