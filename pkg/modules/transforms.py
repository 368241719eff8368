"""
신호/이미지 변환 모듈

1차원 신호를 위상공간 재구성 거리행렬(이미지)로 바꾸고, 슬라이딩 윈도우로
구간을 나누며, 컬러 이미지를 흑백으로 변환하고 블록 평균으로 축소합니다.
"""

from typing import List

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.spatial.distance import pdist, squareform

from modules.exceptions import (
    ImageTooSmallError,
    NonFiniteInputError,
    ParameterRangeError
)
from modules.graden import as_gray_image


def as_time_series(values) -> np.ndarray:
    """
    입력을 검증하여 float64 1차원 배열로 변환합니다.

    Raises:
        ParameterRangeError: 1차원이 아니거나 비어 있을 때
        NonFiniteInputError: NaN/Inf가 포함되어 있을 때
    """
    series = np.asarray(values, dtype=np.float64)
    if series.ndim != 1 or series.size == 0:
        raise ParameterRangeError(f"1차원이고 비어 있지 않은 신호가 필요합니다 (shape={series.shape})")
    if not np.isfinite(series).all():
        raise NonFiniteInputError("신호에 NaN 또는 Inf 값이 포함되어 있습니다.")
    return series


def embed(series, m: int) -> np.ndarray:
    """
    지연 1의 위상공간 재구성 벡터 x(i) = (X_i, ..., X_{i+m-1})를 만듭니다.

    Returns:
        np.ndarray: (N-m+1, m) 배열

    Examples:
        >>> embed([1, 2, 3, 4], 2)
        array([[1., 2.],
               [2., 3.],
               [3., 4.]])
    """
    x = as_time_series(series)
    if m < 1:
        raise ParameterRangeError(f"임베딩 차원 m은 1 이상이어야 합니다: m={m}")
    if len(x) < m:
        raise ParameterRangeError(f"신호 길이({len(x)})가 임베딩 차원 m={m}보다 짧습니다.")
    return sliding_window_view(x, m)


def distance_matrix(series, m: int = 3) -> np.ndarray:
    """
    재구성 벡터 사이 유클리드 거리행렬 D[i, j] = ‖x(i) - x(j)‖₂ 를 만듭니다.

    임계값 처리 없이 그대로 2D 엔트로피의 입력 이미지로 사용합니다.

    Args:
        series: 길이 N의 1차원 신호 (N ≥ m + 1)
        m (int): 임베딩 차원 (기본값: 3)

    Returns:
        np.ndarray: (N-m+1)×(N-m+1) 대칭 행렬, 대각 성분 0
    """
    x = as_time_series(series)
    if len(x) < m + 1:
        raise ParameterRangeError(
            f"거리행렬을 만들려면 신호 길이가 m+1={m + 1} 이상이어야 합니다 (입력: {len(x)})"
        )
    vectors = embed(x, m)
    return squareform(pdist(vectors, metric='euclidean'))


def sliding_windows(series, window: int, step: int) -> List[np.ndarray]:
    """
    신호를 step 간격으로 이동하는 길이 window의 구간으로 나눕니다.

    구간 수는 floor((N - window) / step) + 1 이며 신호 끝을 넘지 않습니다.

    Examples:
        >>> len(sliding_windows(np.zeros(4000), 150, 10))
        386
    """
    x = as_time_series(series)
    if window < 1 or step < 1:
        raise ParameterRangeError(f"window와 step은 1 이상이어야 합니다: window={window}, step={step}")
    if window > len(x):
        raise ParameterRangeError(f"윈도우 길이({window})가 신호 길이({len(x)})보다 깁니다.")
    return [w.copy() for w in sliding_window_view(x, window)[::step]]


def prefix_window(series, length: int) -> np.ndarray:
    """신호의 앞부분 length개를 잘라냅니다 (기어 데이터의 '처음 150개 점' 방식)."""
    x = as_time_series(series)
    if length < 1 or length > len(x):
        raise ParameterRangeError(f"앞부분 길이({length})가 신호 길이({len(x)}) 범위를 벗어났습니다.")
    return x[:length].copy()


def grayscale(rgb_image) -> np.ndarray:
    """
    RGB 이미지를 세 채널의 산술평균으로 흑백 변환합니다.

    Raises:
        ParameterRangeError: 마지막 축이 3채널이 아닐 때

    Examples:
        >>> grayscale([[[30, 60, 90]]])
        array([[60.]])
    """
    rgb = np.asarray(rgb_image, dtype=np.float64)
    if rgb.ndim != 3 or rgb.shape[-1] != 3:
        raise ParameterRangeError(f"H×W×3 형태의 RGB 이미지가 필요합니다 (shape={rgb.shape})")
    if not np.isfinite(rgb).all():
        raise NonFiniteInputError("이미지에 NaN 또는 Inf 값이 포함되어 있습니다.")
    return rgb.mean(axis=-1)


def downsample(image, target_h: int, target_w: int) -> np.ndarray:
    """
    블록 평균으로 이미지를 축소합니다.

    원본을 target_h×target_w 개의 블록으로 최대한 균등하게 나누고, 각 출력 픽셀은
    해당 블록의 평균입니다. 같은 크기면 원본과 동일합니다.

    Raises:
        ImageTooSmallError: 목표 크기가 원본보다 클 때 (확대 요청)
    """
    x = as_gray_image(image)
    height, width = x.shape
    if target_h < 1 or target_w < 1:
        raise ParameterRangeError(f"목표 크기는 양수여야 합니다: {target_h}×{target_w}")
    if target_h > height or target_w > width:
        raise ImageTooSmallError(
            f"확대는 지원하지 않습니다: {height}×{width} → {target_h}×{target_w}"
        )

    row_edges = (np.arange(target_h + 1) * height) // target_h
    col_edges = (np.arange(target_w + 1) * width) // target_w

    sums = np.add.reduceat(np.add.reduceat(x, row_edges[:-1], axis=0), col_edges[:-1], axis=1)
    areas = np.outer(np.diff(row_edges), np.diff(col_edges))
    return sums / areas
