"""
설정 모듈

측정법 파라미터, 실험 기본값, 실행 옵션을 하나의 중첩 딕셔너리로 관리합니다.
점(.)으로 구분된 경로로 값을 읽고 씁니다.
"""

import copy
import os
from typing import Any, Optional

from modules.exceptions import ConfigError


SEED_ENV_VAR = 'GRADEN_SEED'

DEFAULT_CONFIG = {
    # ============= 측정법 파라미터 =============
    'graden': {
        'a': 0.55,
        'b': 0.8
    },
    'sampen2d': {
        'm': 2,
        'r': 0.2
    },
    'distren2d': {
        'm': 2,
        'bins': 128
    },

    # ============= 신호/이미지 변환 =============
    'transforms': {
        'embed_m': 3,
        'window': 150,
        'step': 10,
        'image_size': 128
    },

    # ============= 실험 기본값 =============
    'experiments': {
        'sweep': {
            'size': 100,
            'a_start': 0.51, 'a_stop': 0.74,
            'b_start': 0.76, 'b_stop': 0.95,
            'step': 0.01
        },
        'noise_class': {
            'n_samples': 50,
            'size': 100,
            'measures': ['distren2d', 'graden']
        },
        'robustness': {
            'size_start': 20, 'size_stop': 150, 'size_step': 10,
            'n_samples': 100,
            'noise_types': ['white'],
            'measures': ['sampen2d', 'distren2d', 'graden']
        },
        'mix_robustness': {
            'p_values': [0.2, 0.5, 0.8],
            'noise_variances': [0.01, 0.02, 0.03, 0.04, 0.05],
            'n_samples': 20,
            'size': 100,
            'measures': ['sampen2d', 'distren2d', 'graden']
        },
        'logistic': {
            'a_start': 3.5, 'a_stop': 4.0, 'step': 0.01,
            'n': 150,
            'm': 3,
            'x0': 0.3,
            'burn_in': 0,
            'measures': ['peren2d', 'distren2d', 'graden']
        },
        'benchmark': {
            'sizes': [40, 80, 120, 160],
            'repeats': 3
        }
    },

    # ============= 실행 옵션 =============
    'runtime': {
        'seed': 42,
        'workers': 1
    }
}

_config = copy.deepcopy(DEFAULT_CONFIG)


def get_config(path: str, default=None):
    """
    설정에서 값을 안전하게 가져옵니다.

    사용 예시:
        get_config('graden.a')                 → 0.55
        get_config('experiments.sweep.size')   → 100
        get_config('없는.경로', 0)              → 0
    """
    keys = path.split('.')
    value = _config

    for key in keys:
        if isinstance(value, dict) and key in value:
            value = value[key]
        else:
            return default

    return copy.deepcopy(value)


def set_config(path: str, value: Any) -> None:
    """
    설정 값을 변경합니다.

    사용 예시:
        set_config('runtime.workers', 4)
    """
    keys = path.split('.')
    config = _config

    # 마지막 키 전까지 순회
    for key in keys[:-1]:
        if key not in config or not isinstance(config[key], dict):
            config[key] = {}
        config = config[key]

    config[keys[-1]] = value


def reset_config() -> None:
    """설정을 기본값으로 되돌립니다."""
    global _config
    _config = copy.deepcopy(DEFAULT_CONFIG)


def resolve_seed(explicit: Optional[int] = None) -> int:
    """
    실행에 사용할 시드를 결정합니다.

    우선순위: 명시적 인자 > GRADEN_SEED 환경 변수 > runtime.seed 설정

    Args:
        explicit (Optional[int]): 명령행 등에서 직접 지정한 시드

    Returns:
        int: 0 이상의 정수 시드

    Raises:
        ConfigError: 환경 변수 값이 0 이상의 정수가 아닐 때
    """
    if explicit is not None:
        return int(explicit)

    env_value = os.environ.get(SEED_ENV_VAR)
    if env_value is not None and env_value.strip():
        try:
            seed = int(env_value.strip())
        except ValueError:
            raise ConfigError(f"{SEED_ENV_VAR} 값이 정수가 아닙니다: '{env_value}'")
        if seed < 0:
            raise ConfigError(f"{SEED_ENV_VAR} 값은 0 이상이어야 합니다: {seed}")
        return seed

    return int(get_config('runtime.seed', 0))
