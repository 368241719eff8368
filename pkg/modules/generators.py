"""
모의 데이터 생성 모듈

유색 잡음(1D/2D), MIX_2D 혼합 과정, 로지스틱 사상 수열을 시드로 재현 가능하게
생성합니다. 난수 생성기는 numpy의 PCG64(default_rng)를 사용합니다.
"""

import math
from typing import Union

import numpy as np

from modules.exceptions import ParameterRangeError


# 잡음 종류별 스펙트럼 지수 (PSD ∝ 1/f^beta)
NOISE_BETAS = {
    'white': 0.0,
    'pink': 1.0,
    'red': 2.0,
    'blue': -1.0
}

MIN_NOISE_LENGTH = 8
SINE_PERIOD = 12


def derive_seed(master_seed: int, *keys: int) -> int:
    """
    기본 시드와 스트림 키(표본 번호 등)로부터 독립적인 64비트 시드를 만듭니다.

    실행 순서나 작업자 수와 관계없이 (master_seed, keys)가 같으면 같은 시드가 나옵니다.

    Examples:
        >>> derive_seed(42, 0, 1) == derive_seed(42, 0, 1)
        True
    """
    sequence = np.random.SeedSequence([int(master_seed), *[int(k) for k in keys]])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def noise_beta(noise: Union[str, float]) -> float:
    """잡음 이름('white', 'pink', ...) 또는 숫자를 스펙트럼 지수로 변환합니다."""
    if isinstance(noise, str):
        if noise not in NOISE_BETAS:
            raise ParameterRangeError(
                f"알 수 없는 잡음 종류입니다: '{noise}' (가능: {', '.join(NOISE_BETAS)})"
            )
        return NOISE_BETAS[noise]
    beta = float(noise)
    if not math.isfinite(beta):
        raise ParameterRangeError(f"스펙트럼 지수는 유한해야 합니다: beta={beta}")
    return beta


def _standardize(values: np.ndarray) -> np.ndarray:
    std = values.std()
    if std == 0:
        return np.zeros_like(values)
    return (values - values.mean()) / std


def colored_noise_1d(beta: Union[str, float], length: int, seed: int) -> np.ndarray:
    """
    주파수 영역 성형으로 1/f^beta 유색 잡음을 생성합니다.

    백색 가우스 잡음의 스펙트럼에 f^(-beta/2)를 곱하고(직류 성분은 0) 역변환한 뒤
    평균 0, 모집단 표준편차 1로 표준화합니다.

    Args:
        beta: 스펙트럼 지수 또는 잡음 이름 (white=0, pink=1, red=2, blue=-1)
        length (int): 길이 (8 이상)
        seed (int): 64비트 부호 없는 정수 시드

    Returns:
        np.ndarray: 길이 length의 잡음

    Raises:
        ParameterRangeError: 길이가 8 미만일 때
    """
    beta = noise_beta(beta)
    length = int(length)
    if length < MIN_NOISE_LENGTH:
        raise ParameterRangeError(f"잡음 길이는 {MIN_NOISE_LENGTH} 이상이어야 합니다: {length}")

    rng = np.random.default_rng(seed)
    spectrum = np.fft.rfft(rng.standard_normal(length))
    freqs = np.fft.rfftfreq(length)

    scale = np.zeros_like(freqs)
    scale[1:] = freqs[1:] ** (-beta / 2.0)

    return _standardize(np.fft.irfft(spectrum * scale, n=length))


def noise_image(beta: Union[str, float], height: int, width: int, seed: int) -> np.ndarray:
    """
    1D 유색 잡음을 행 우선으로 H×W 이미지로 재배열합니다.

    Examples:
        >>> img = noise_image('white', 100, 100, seed=1)
        >>> img.shape
        (100, 100)
    """
    if height < 1 or width < 1:
        raise ParameterRangeError(f"이미지 크기는 양수여야 합니다: {height}×{width}")
    return colored_noise_1d(beta, height * width, seed).reshape(height, width)


def sine_image(height: int, width: int, period: int = SINE_PERIOD) -> np.ndarray:
    """주기 이미지 X[i, j] = sin(2πi/period) + sin(2πj/period), i, j는 1부터"""
    rows = np.sin(2 * np.pi * np.arange(1, height + 1) / period)
    cols = np.sin(2 * np.pi * np.arange(1, width + 1) / period)
    return rows[:, None] + cols[None, :]


def mix2d(p: float, height: int, width: int, seed: int) -> np.ndarray:
    """
    MIX_2D(p) 이미지를 생성합니다.

    MIX = (1-Z)·X + Z·Y 이며 X는 주기 사인 이미지, Y는 [-√3, √3] 균등분포,
    Z는 확률 p로 1이 되는 베르누이 변수입니다. Y와 Z는 시드에서 분기한 서로
    독립인 하위 스트림에서 뽑습니다.

    Args:
        p (float): 확률적 픽셀 비율, 0 ≤ p ≤ 1
        height (int): 이미지 높이
        width (int): 이미지 너비
        seed (int): 시드

    Returns:
        np.ndarray: (height, width) 이미지

    Raises:
        ParameterRangeError: p가 [0, 1]을 벗어났을 때
    """
    if not 0 <= p <= 1:
        raise ParameterRangeError(f"MIX 확률 p는 [0, 1] 범위여야 합니다: p={p}")
    if height < 1 or width < 1:
        raise ParameterRangeError(f"이미지 크기는 양수여야 합니다: {height}×{width}")

    periodic = sine_image(height, width)
    if p == 0:
        return periodic

    y_sequence, z_sequence = np.random.SeedSequence(seed).spawn(2)
    bound = math.sqrt(3.0)
    uniform = np.random.default_rng(y_sequence).uniform(-bound, bound, size=(height, width))
    stochastic = np.random.default_rng(z_sequence).random((height, width)) < p

    return np.where(stochastic, uniform, periodic)


def add_white_noise(image: np.ndarray, variance: float, seed: int) -> np.ndarray:
    """이미지에 분산 variance인 가우스 백색 잡음을 더합니다 (variance=0이면 복사본)."""
    if variance < 0:
        raise ParameterRangeError(f"잡음 분산은 0 이상이어야 합니다: {variance}")
    image = np.asarray(image, dtype=np.float64)
    if variance == 0:
        return image.copy()
    rng = np.random.default_rng(seed)
    return image + math.sqrt(variance) * rng.standard_normal(image.shape)


def logistic_series(a: float, x0: float, n: int, burn_in: int = 0) -> np.ndarray:
    """
    로지스틱 사상 x_{i+1} = a·x_i·(1 - x_i)의 수열을 생성합니다.

    초기값 x0를 첫 원소로 하여 반복하고, 앞의 burn_in개를 버린 뒤 n개를 반환합니다.

    Args:
        a (float): 제어 파라미터, 0 < a ≤ 4
        x0 (float): 초기값, 0 < x0 < 1
        n (int): 반환할 길이 (1 이상)
        burn_in (int): 버릴 앞부분 반복 횟수 (기본값: 0)

    Returns:
        np.ndarray: 길이 n의 수열 (모든 값이 [0, 1])

    Examples:
        >>> logistic_series(4.0, 0.5, 3)
        array([0.5, 1. , 0. ])
    """
    if not 0 < a <= 4:
        raise ParameterRangeError(f"제어 파라미터 a는 (0, 4] 범위여야 합니다: a={a}")
    if not 0 < x0 < 1:
        raise ParameterRangeError(f"초기값 x0는 (0, 1) 범위여야 합니다: x0={x0}")
    if n < 1:
        raise ParameterRangeError(f"수열 길이 n은 1 이상이어야 합니다: n={n}")
    if burn_in < 0:
        raise ParameterRangeError(f"burn_in은 0 이상이어야 합니다: {burn_in}")

    x = float(x0)
    for _ in range(burn_in):
        x = a * x * (1 - x)

    values = np.empty(n, dtype=np.float64)
    for k in range(n):
        values[k] = x
        x = a * x * (1 - x)

    return values
