"""
실험 모듈

모의 데이터 실험(임계값 스윕, 유색 잡음 분류, 변동계수 강건성, 로지스틱 사상 스윕,
계산 시간 측정)과 데이터셋 분류 파이프라인을 실행하고, 결과를 긴 형식의 표로
정리합니다.

모든 표본의 난수 시드는 (기본 시드, 표본 키)에서 파생되므로 작업자 수나 실행
순서와 관계없이 같은 결과가 나옵니다.
"""

import functools
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy import stats

from modules import __version__
from modules.baselines import distren2d, peren2d, sampen2d
from modules.config import get_config, resolve_seed
from modules.data_loader import LoadFailure, load_dataset, load_signal_dataset
from modules.exceptions import (
    GradEnError,
    InsufficientDataError,
    ManifestError,
    ParameterRangeError
)
from modules.generators import (
    add_white_noise,
    derive_seed,
    logistic_series,
    mix2d,
    noise_image
)
from modules.graden import (
    compute_gradients,
    graden,
    graden_from_histogram,
    pattern_histogram,
    quantile_thresholds,
    standardize,
    thresholds_from_config
)
from modules.statistics import (
    coefficient_of_variation,
    pairwise_effect_sizes,
    summaries_frame
)
from modules.transforms import (
    distance_matrix,
    downsample,
    prefix_window,
    sliding_windows
)


logger = logging.getLogger(__name__)

MEASURE_NAMES = ('graden', 'sampen2d', 'distren2d', 'peren2d')

MEASURE_PARAMETERS = {
    'graden': ('a', 'b', 'delta', 'gamma'),
    'sampen2d': ('m', 'r'),
    'distren2d': ('m', 'bins'),
    'peren2d': ()
}

# 잡음 종류의 시드 키는 이 순서의 위치
NOISE_ORDER = ('white', 'pink', 'blue', 'red')

PIPELINES = ('image', 'signal')
WINDOW_MODES = ('sliding', 'prefix')

DEFAULT_BENCHMARK_MEASURES = (
    ('sampen2d', {'m': 1}),
    ('sampen2d', {'m': 2}),
    ('sampen2d', {'m': 3}),
    ('distren2d', {'m': 1}),
    ('distren2d', {'m': 2}),
    ('distren2d', {'m': 3}),
    ('graden', {})
)

MANIFEST_FIELDS = ('toolkit', 'version', 'command', 'seed', 'parameters', 'created_at', 'durations')

# 스트림 구분용 시드 키
_MIX_STREAM = 1
_GROUP_STREAM = 2


@dataclass(frozen=True)
class Measure:
    """이름과 파라미터가 고정된 엔트로피 측정 함수"""
    name: str
    params: Tuple[Tuple[str, Any], ...]
    func: Callable[[np.ndarray], float] = field(repr=False, compare=False)

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({', '.join(f'{key}={value}' for key, value in self.params)})"

    def __call__(self, image) -> float:
        return self.func(image)


@dataclass
class ExperimentResult:
    """
    실험 결과 묶음

    Attributes:
        table: 관측값 한 개당 한 행인 결과 표
        summaries: 집단별 요약 통계 (없으면 None)
        effect_sizes: 집단 쌍별 Hedges' g (없으면 None)
        failures: 데이터셋에서 읽지 못한 파일 목록
    """
    table: pd.DataFrame
    summaries: Optional[pd.DataFrame] = None
    effect_sizes: Optional[pd.DataFrame] = None
    failures: List[LoadFailure] = field(default_factory=list)


def build_measure(name: str, strict: bool = False, **params) -> Measure:
    """
    측정법 이름과 파라미터로 Measure를 만듭니다.

    None인 파라미터는 설정 기본값을 사용하며, 라벨에는 직접 지정한 값만 표시됩니다.
    SampEn2D는 정의되지 않는 경우 strict=True면 예외, 아니면 NaN을 돌려줍니다.

    Args:
        name (str): 'graden', 'sampen2d', 'distren2d', 'peren2d' 중 하나
        strict (bool): SampEn2D가 정의되지 않을 때 예외를 낼지 여부 (기본값: False)
        **params: graden(a, b, delta, gamma), sampen2d(m, r), distren2d(m, bins)

    Returns:
        Measure: 이미지 하나를 받아 엔트로피 값을 돌려주는 호출 가능 객체

    Raises:
        ParameterRangeError: 알 수 없는 측정법이거나 해당 측정법에 없는 파라미터일 때

    Examples:
        >>> build_measure('sampen2d', m=1).label
        'sampen2d(m=1)'
    """
    if name not in MEASURE_NAMES:
        raise ParameterRangeError(
            f"알 수 없는 측정법입니다: '{name}' (가능: {', '.join(MEASURE_NAMES)})"
        )

    given = {key: value for key, value in params.items() if value is not None}
    unknown = sorted(set(given) - set(MEASURE_PARAMETERS[name]))
    if unknown:
        raise ParameterRangeError(f"{name}에 사용할 수 없는 파라미터입니다: {', '.join(unknown)}")

    if name == 'graden':
        # 임계값 범위 검사는 측정 전에
        func = functools.partial(graden, thresholds=thresholds_from_config(**given))
    elif name == 'sampen2d':
        func = functools.partial(
            sampen2d,
            m=given.get('m', get_config('sampen2d.m', 2)),
            r=given.get('r', get_config('sampen2d.r', 0.2)),
            on_undefined='raise' if strict else 'nan'
        )
    elif name == 'distren2d':
        func = functools.partial(
            distren2d,
            m=given.get('m', get_config('distren2d.m', 2)),
            bins=given.get('bins', get_config('distren2d.bins', 128))
        )
    else:
        func = peren2d

    ordered = tuple((key, given[key]) for key in MEASURE_PARAMETERS[name] if key in given)
    return Measure(name=name, params=ordered, func=func)


def _resolve_measures(measures: Optional[Iterable[Union[str, Measure]]], config_path: str) -> List[Measure]:
    if measures is None:
        measures = get_config(config_path, [])
    resolved = [m if isinstance(m, Measure) else build_measure(m) for m in measures]
    if not resolved:
        raise ParameterRangeError("측정법이 하나 이상 필요합니다.")
    return resolved


def _evaluate(measures: Sequence[Measure], image: np.ndarray) -> List[float]:
    return [float(measure(image)) for measure in measures]


def _map_samples(func: Callable, items: Sequence, workers: Optional[int] = None) -> List:
    """
    작업 목록에 func를 적용합니다.

    workers > 1이면 스레드 풀을 사용하며, 결과는 항상 입력 순서를 따릅니다.
    """
    workers = int(get_config('runtime.workers', 1) if workers is None else workers)
    if workers < 1:
        raise ParameterRangeError(f"작업자 수는 1 이상이어야 합니다: {workers}")

    items = list(items)
    if workers == 1 or len(items) <= 1:
        return [func(item) for item in items]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def value_grid(start: float, stop: float, step: float) -> np.ndarray:
    """
    start부터 stop까지(양 끝 포함) step 간격의 격자를 만듭니다.

    부동소수점 누적 오차를 없애기 위해 소수 10자리로 반올림합니다.

    Examples:
        >>> len(value_grid(0.51, 0.74, 0.01))
        24
    """
    if not step > 0:
        raise ParameterRangeError(f"격자 간격은 0보다 커야 합니다: step={step}")
    if stop < start:
        raise ParameterRangeError(f"격자 끝({stop})이 시작({start})보다 작습니다.")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(count), 10)


def _check_noise_types(noise_types: Sequence[str]) -> List[str]:
    noise_types = list(noise_types)
    unknown = [noise for noise in noise_types if noise not in NOISE_ORDER]
    if unknown or not noise_types:
        raise ParameterRangeError(
            f"잡음 종류는 {', '.join(NOISE_ORDER)} 중에서 하나 이상 골라야 합니다: {noise_types}"
        )
    return noise_types


def _probability_key(p: float) -> int:
    return int(round(p * 1_000_000))


def _group_cv(values: Sequence[float], context: str) -> Tuple[int, float]:
    """NaN을 제외한 값의 변동계수 (계산할 수 없으면 NaN과 경고)"""
    values = np.asarray(values, dtype=np.float64)
    finite = values[np.isfinite(values)]
    dropped = len(values) - len(finite)
    if dropped:
        logger.warning("⚠️ %s: 정의되지 않은 값 %d개를 제외합니다.", context, dropped)

    try:
        return len(finite), coefficient_of_variation(finite)
    except GradEnError as e:
        logger.warning("⚠️ %s: 변동계수를 계산할 수 없습니다 (%s)", context, e)
        return len(finite), float('nan')


def _groups_by(table: pd.DataFrame, group_column: str) -> Dict[str, np.ndarray]:
    groups = {}
    for name, frame in table.groupby(group_column, sort=False):
        values = frame['value'].to_numpy(dtype=np.float64)
        finite = values[np.isfinite(values)]
        if len(finite) < len(values):
            logger.warning("⚠️ %s 집단: 정의되지 않은 값 %d개를 제외합니다.", name, len(values) - len(finite))
        if len(finite):
            groups[str(name)] = finite
    return groups


def _summarize(table: pd.DataFrame, group_column: str) -> Tuple[pd.DataFrame, Optional[pd.DataFrame]]:
    """측정법마다 집단 요약 통계와 집단 쌍별 효과크기를 계산합니다."""
    summaries = []
    effects = []
    for label, frame in table.groupby('measure', sort=False):
        groups = _groups_by(frame, group_column)
        if not groups:
            logger.warning("⚠️ %s: 요약할 값이 없습니다.", label)
            continue

        summary = summaries_frame(groups)
        summary.insert(0, 'measure', label)
        summaries.append(summary)

        if len(groups) < 2:
            continue
        effect = pairwise_effect_sizes(groups, skip_undefined=True)
        effect.insert(0, 'measure', label)
        effects.append(effect)

    summary_table = pd.concat(summaries, ignore_index=True) if summaries else None
    effect_table = pd.concat(effects, ignore_index=True) if effects else None
    return summary_table, effect_table


def sweep_thresholds(
    size: Optional[int] = None,
    a_range: Optional[Tuple[float, float]] = None,
    b_range: Optional[Tuple[float, float]] = None,
    step: Optional[float] = None,
    seed: Optional[int] = None,
    noise: str = 'white',
    workers: Optional[int] = None
) -> ExperimentResult:
    """
    한 장의 시드 고정 잡음 이미지에서 (a, b) 격자 전체의 GradEn을 계산합니다.

    기울기 표준화는 한 번만 하고, 격자점마다 기호화와 빈도 계산만 다시 합니다.

    Args:
        size (int): 정사각 이미지 한 변 (기본값: 100)
        a_range (Tuple[float, float]): a의 (시작, 끝) (기본값: 0.51~0.74)
        b_range (Tuple[float, float]): b의 (시작, 끝) (기본값: 0.76~0.95)
        step (float): 격자 간격 (기본값: 0.01)
        seed (int): 기본 시드
        noise (str): 잡음 종류 (기본값: 'white')
        workers (int): 작업자 수

    Returns:
        ExperimentResult: experiment, measure, a, b, value 컬럼 (a 바깥, b 안쪽 순서)

    Raises:
        ParameterRangeError: 격자가 분위수 수준 범위를 벗어날 때
    """
    defaults = get_config('experiments.sweep', {})
    size = int(defaults.get('size', 100) if size is None else size)
    a_start, a_stop = a_range if a_range is not None else (defaults['a_start'], defaults['a_stop'])
    b_start, b_stop = b_range if b_range is not None else (defaults['b_start'], defaults['b_stop'])
    step = float(defaults.get('step', 0.01) if step is None else step)
    seed = resolve_seed(seed)
    _check_noise_types([noise])

    a_values = value_grid(a_start, a_stop, step)
    b_values = value_grid(b_start, b_stop, step)
    grid = [quantile_thresholds(a, b) for a in a_values for b in b_values]
    logger.info("임계값 스윕: %d×%d 격자, %d×%d 이미지", len(a_values), len(b_values), size, size)

    image = noise_image(noise, size, size, derive_seed(seed, NOISE_ORDER.index(noise)))
    gradient_field = standardize(compute_gradients(image))

    values = _map_samples(
        lambda thresholds: graden_from_histogram(pattern_histogram(gradient_field, thresholds)),
        grid,
        workers
    )

    table = pd.DataFrame({
        'experiment': 'sweep',
        'measure': 'graden',
        'a': [t.quantile_a for t in grid],
        'b': [t.quantile_b for t in grid],
        'value': values
    })
    return ExperimentResult(table=table)


def run_noise_classification(
    n_samples: Optional[int] = None,
    size: Optional[int] = None,
    measures: Optional[Iterable[Union[str, Measure]]] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None
) -> ExperimentResult:
    """
    white/pink/blue/red 잡음 이미지를 종류별로 n_samples개씩 만들어 측정합니다.

    Args:
        n_samples (int): 종류별 표본 수, 2 이상 (기본값: 50)
        size (int): 정사각 이미지 한 변 (기본값: 100)
        measures: 측정법 이름 또는 Measure 목록 (기본값: distren2d, graden)
        seed (int): 기본 시드
        workers (int): 작업자 수

    Returns:
        ExperimentResult: 표본별 값(experiment, measure, noise, size, sample, value),
        잡음 종류별 요약 통계, 종류 쌍별 효과크기

    Raises:
        InsufficientDataError: n_samples가 2 미만일 때
    """
    defaults = get_config('experiments.noise_class', {})
    n_samples = int(defaults.get('n_samples', 50) if n_samples is None else n_samples)
    size = int(defaults.get('size', 100) if size is None else size)
    measures = _resolve_measures(measures, 'experiments.noise_class.measures')
    seed = resolve_seed(seed)
    if n_samples < 2:
        raise InsufficientDataError(f"종류별 표본은 2개 이상이어야 합니다: {n_samples}")

    items = [(noise, k) for noise in NOISE_ORDER for k in range(n_samples)]
    logger.info("유색 잡음 분류: 표본 %d개 × %d종, 측정법 %s",
                n_samples, len(NOISE_ORDER), [m.label for m in measures])

    def evaluate(item):
        noise, k = item
        image = noise_image(noise, size, size, derive_seed(seed, NOISE_ORDER.index(noise), k))
        return _evaluate(measures, image)

    values = _map_samples(evaluate, items, workers)

    rows = []
    for measure_idx, measure in enumerate(measures):
        for (noise, k), sample_values in zip(items, values):
            rows.append({
                'experiment': 'noise_class',
                'measure': measure.label,
                'noise': noise,
                'size': size,
                'sample': k,
                'value': sample_values[measure_idx]
            })
    table = pd.DataFrame(rows, columns=['experiment', 'measure', 'noise', 'size', 'sample', 'value'])

    summaries, effects = _summarize(table, 'noise')
    return ExperimentResult(table=table, summaries=summaries, effect_sizes=effects)


def run_robustness(
    sizes: Optional[Sequence[int]] = None,
    n_samples: Optional[int] = None,
    measures: Optional[Iterable[Union[str, Measure]]] = None,
    noise_types: Optional[Sequence[str]] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None
) -> ExperimentResult:
    """
    이미지 크기별로 잡음 이미지 n_samples개를 측정하여 변동계수(CV)를 구합니다.

    정의되지 않은 값(NaN)은 경고와 함께 제외하고 남은 값으로 CV를 계산합니다.

    Args:
        sizes (Sequence[int]): 정사각 이미지 한 변 목록 (기본값: 20~150, 10 간격)
        n_samples (int): 크기별 표본 수 (기본값: 100)
        measures: 측정법 목록 (기본값: sampen2d, distren2d, graden)
        noise_types (Sequence[str]): 잡음 종류 목록 (기본값: white)
        seed (int): 기본 시드
        workers (int): 작업자 수

    Returns:
        ExperimentResult: experiment, measure, noise, size, n, value(CV) 컬럼
    """
    defaults = get_config('experiments.robustness', {})
    if sizes is None:
        sizes = list(range(defaults['size_start'], defaults['size_stop'] + 1, defaults['size_step']))
    sizes = [int(s) for s in sizes]
    n_samples = int(defaults.get('n_samples', 100) if n_samples is None else n_samples)
    noise_types = _check_noise_types(defaults.get('noise_types', ['white']) if noise_types is None else noise_types)
    measures = _resolve_measures(measures, 'experiments.robustness.measures')
    seed = resolve_seed(seed)
    if n_samples < 2:
        raise InsufficientDataError(f"크기별 표본은 2개 이상이어야 합니다: {n_samples}")
    if not sizes:
        raise ParameterRangeError("이미지 크기가 하나 이상 필요합니다.")

    items = [(noise, size, k) for noise in noise_types for size in sizes for k in range(n_samples)]
    logger.info("강건성 실험: 크기 %s, 표본 %d개, 잡음 %s", sizes, n_samples, noise_types)

    def evaluate(item):
        noise, size, k = item
        image = noise_image(noise, size, size, derive_seed(seed, NOISE_ORDER.index(noise), size, k))
        return _evaluate(measures, image)

    values = np.array(_map_samples(evaluate, items, workers), dtype=np.float64)
    values = values.reshape(len(noise_types), len(sizes), n_samples, len(measures))

    rows = []
    for measure_idx, measure in enumerate(measures):
        for noise_idx, noise in enumerate(noise_types):
            for size_idx, size in enumerate(sizes):
                n_valid, cv = _group_cv(
                    values[noise_idx, size_idx, :, measure_idx],
                    f"{measure.label} {noise} {size}×{size}"
                )
                rows.append({
                    'experiment': 'robustness',
                    'measure': measure.label,
                    'noise': noise,
                    'size': size,
                    'n': n_valid,
                    'value': cv
                })

    table = pd.DataFrame(rows, columns=['experiment', 'measure', 'noise', 'size', 'n', 'value'])
    return ExperimentResult(table=table)


def run_mix_noise_robustness(
    p_values: Optional[Sequence[float]] = None,
    noise_variances: Optional[Sequence[float]] = None,
    n_samples: Optional[int] = None,
    size: Optional[int] = None,
    measures: Optional[Iterable[Union[str, Measure]]] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None
) -> ExperimentResult:
    """
    MIX_2D(p) 이미지에 분산별 백색 잡음을 더한 집단의 변동계수를 구합니다.

    p마다 기준 MIX 이미지 한 장을 고정하고, 각 분산마다 서로 다른 잡음을
    n_samples번 더합니다. CV는 p별로 모든 분산의 이미지를 한 집단으로 묶어 계산합니다.

    Args:
        p_values (Sequence[float]): MIX 확률 목록 (기본값: 0.2, 0.5, 0.8)
        noise_variances (Sequence[float]): 잡음 분산 목록 (기본값: 0.01~0.05)
        n_samples (int): 분산별 표본 수 (기본값: 20)
        size (int): 정사각 이미지 한 변 (기본값: 100)
        measures: 측정법 목록 (기본값: sampen2d, distren2d, graden)
        seed (int): 기본 시드
        workers (int): 작업자 수

    Returns:
        ExperimentResult: experiment, measure, p, n, value(CV) 컬럼
    """
    defaults = get_config('experiments.mix_robustness', {})
    p_values = [float(p) for p in (defaults.get('p_values') if p_values is None else p_values)]
    noise_variances = [float(v) for v in (defaults.get('noise_variances') if noise_variances is None else noise_variances)]
    n_samples = int(defaults.get('n_samples', 20) if n_samples is None else n_samples)
    size = int(defaults.get('size', 100) if size is None else size)
    measures = _resolve_measures(measures, 'experiments.mix_robustness.measures')
    seed = resolve_seed(seed)
    if not p_values or not noise_variances:
        raise ParameterRangeError("p와 잡음 분산은 각각 하나 이상 필요합니다.")
    if n_samples * len(noise_variances) < 2:
        raise InsufficientDataError("p별 집단에는 2개 이상의 이미지가 필요합니다.")

    bases = [mix2d(p, size, size, derive_seed(seed, _MIX_STREAM, _probability_key(p))) for p in p_values]
    items = [
        (p_idx, v_idx, k)
        for p_idx in range(len(p_values))
        for v_idx in range(len(noise_variances))
        for k in range(n_samples)
    ]
    logger.info("MIX 잡음 강건성: p %s, 분산 %s, 표본 %d개", p_values, noise_variances, n_samples)

    def evaluate(item):
        p_idx, v_idx, k = item
        key = _probability_key(p_values[p_idx])
        image = add_white_noise(
            bases[p_idx],
            noise_variances[v_idx],
            derive_seed(seed, _MIX_STREAM, key, v_idx, k)
        )
        return _evaluate(measures, image)

    values = np.array(_map_samples(evaluate, items, workers), dtype=np.float64)
    values = values.reshape(len(p_values), len(noise_variances) * n_samples, len(measures))

    rows = []
    for measure_idx, measure in enumerate(measures):
        for p_idx, p in enumerate(p_values):
            n_valid, cv = _group_cv(values[p_idx, :, measure_idx], f"{measure.label} p={p}")
            rows.append({
                'experiment': 'mix_robustness',
                'measure': measure.label,
                'p': p,
                'n': n_valid,
                'value': cv
            })

    table = pd.DataFrame(rows, columns=['experiment', 'measure', 'p', 'n', 'value'])
    return ExperimentResult(table=table)


def run_logistic_sweep(
    a_range: Optional[Tuple[float, float]] = None,
    step: Optional[float] = None,
    n: Optional[int] = None,
    m: Optional[int] = None,
    measures: Optional[Iterable[Union[str, Measure]]] = None,
    x0: Optional[float] = None,
    burn_in: Optional[int] = None,
    workers: Optional[int] = None
) -> ExperimentResult:
    """
    로지스틱 사상의 제어 파라미터 a를 바꾸며 거리행렬 이미지의 엔트로피를 계산합니다.

    각 a마다 길이 n 수열 → 임베딩 차원 m 거리행렬 → 측정법 적용 순서입니다.
    요약 표에는 측정법별로 a와 값의 스피어만 순위상관계수가 담깁니다.

    Returns:
        ExperimentResult: 값 표(experiment, measure, a, value)와
        스피어만 표(measure, spearman, p_value)
    """
    defaults = get_config('experiments.logistic', {})
    a_start, a_stop = a_range if a_range is not None else (defaults['a_start'], defaults['a_stop'])
    step = float(defaults.get('step', 0.01) if step is None else step)
    n = int(defaults.get('n', 150) if n is None else n)
    m = int(defaults.get('m', 3) if m is None else m)
    x0 = float(defaults.get('x0', 0.3) if x0 is None else x0)
    burn_in = int(defaults.get('burn_in', 0) if burn_in is None else burn_in)
    measures = _resolve_measures(measures, 'experiments.logistic.measures')

    a_values = value_grid(a_start, a_stop, step)
    logger.info("로지스틱 스윕: a %d개 (%.2f~%.2f), N=%d, m=%d", len(a_values), a_start, a_stop, n, m)

    def evaluate(a):
        image = distance_matrix(logistic_series(a, x0, n, burn_in), m)
        return _evaluate(measures, image)

    values = np.array(_map_samples(evaluate, list(a_values), workers), dtype=np.float64)

    rows = []
    correlations = []
    for measure_idx, measure in enumerate(measures):
        column = values[:, measure_idx]
        for a, value in zip(a_values, column):
            rows.append({'experiment': 'logistic', 'measure': measure.label, 'a': float(a), 'value': value})

        rho, p_value = float('nan'), float('nan')
        finite = np.isfinite(column)
        if finite.sum() >= 2 and np.ptp(column[finite]) > 0:
            rho, p_value = stats.spearmanr(a_values[finite], column[finite])
        else:
            logger.warning("⚠️ %s: 값이 일정하여 순위상관을 계산할 수 없습니다.", measure.label)
        correlations.append({'measure': measure.label, 'spearman': float(rho), 'p_value': float(p_value)})

    table = pd.DataFrame(rows, columns=['experiment', 'measure', 'a', 'value'])
    summaries = pd.DataFrame(correlations, columns=['measure', 'spearman', 'p_value'])
    return ExperimentResult(table=table, summaries=summaries)


def run_benchmark(
    sizes: Optional[Sequence[int]] = None,
    measures: Optional[Iterable[Union[str, Measure]]] = None,
    repeats: Optional[int] = None,
    seed: Optional[int] = None,
    timer: Callable[[], float] = time.perf_counter
) -> ExperimentResult:
    """
    측정법별·이미지 크기별 계산 시간(반복 측정의 중앙값, 초)을 잽니다.

    시간 측정은 항상 한 스레드에서 순서대로 실행합니다.

    Args:
        sizes (Sequence[int]): 정사각 이미지 한 변 목록 (기본값: 40, 80, 120, 160)
        measures: 측정법 목록 (기본값: SampEn2D m=1,2,3, DistrEn2D m=1,2,3, GradEn)
        repeats (int): 반복 횟수 (기본값: 3)
        seed (int): 기본 시드
        timer (Callable): 시각 함수 (기본값: time.perf_counter)

    Returns:
        ExperimentResult: 측정법당 한 행, 크기당 한 열('40*40' 형식)인 표
    """
    defaults = get_config('experiments.benchmark', {})
    sizes = [int(s) for s in (defaults.get('sizes') if sizes is None else sizes)]
    repeats = int(defaults.get('repeats', 3) if repeats is None else repeats)
    if measures is None:
        measures = [build_measure(name, **params) for name, params in DEFAULT_BENCHMARK_MEASURES]
    measures = _resolve_measures(measures, 'experiments.benchmark.measures')
    seed = resolve_seed(seed)
    if repeats < 1:
        raise ParameterRangeError(f"반복 횟수는 1 이상이어야 합니다: {repeats}")
    if not sizes:
        raise ParameterRangeError("이미지 크기가 하나 이상 필요합니다.")

    images = {size: noise_image('white', size, size, derive_seed(seed, size)) for size in sizes}
    columns = [f"{size}*{size}" for size in sizes]

    rows = []
    for measure in measures:
        row = {'measure': measure.label}
        for size, column in zip(sizes, columns):
            elapsed = []
            for _ in range(repeats):
                start = timer()
                measure(images[size])
                elapsed.append(timer() - start)
            row[column] = float(np.median(elapsed))
            logger.info("계산 시간 %s %s: %.4f초", measure.label, column, row[column])
        rows.append(row)

    return ExperimentResult(table=pd.DataFrame(rows, columns=['measure'] + columns))


def _prepare_image(image: np.ndarray, image_size: int, source: str) -> np.ndarray:
    """image_size보다 큰 축만 블록 평균으로 축소합니다."""
    height, width = image.shape
    target_h, target_w = min(height, image_size), min(width, image_size)
    if height < image_size or width < image_size:
        logger.warning("⚠️ %s: 이미지(%d×%d)가 %d×%d보다 작아 확대하지 않고 사용합니다.",
                       source, height, width, image_size, image_size)
    if (target_h, target_w) == (height, width):
        return image
    return downsample(image, target_h, target_w)


def _classification_result(
    records: List[Tuple[str, str, int, Callable[[], np.ndarray]]],
    measure: Measure,
    workers: Optional[int],
    failures: Optional[List[LoadFailure]] = None
) -> ExperimentResult:
    values = _map_samples(lambda record: float(measure(record[3]())), records, workers)

    table = pd.DataFrame(
        [
            {
                'experiment': 'classify',
                'measure': measure.label,
                'label': label,
                'source': source,
                'window': window,
                'value': value
            }
            for (label, source, window, _), value in zip(records, values)
        ],
        columns=['experiment', 'measure', 'label', 'source', 'window', 'value']
    )

    summaries, effects = _summarize(table, 'label')
    return ExperimentResult(table=table, summaries=summaries, effect_sizes=effects, failures=failures or [])


def classify_groups(
    groups: Dict[str, Sequence[np.ndarray]],
    measure: Union[str, Measure] = 'graden',
    workers: Optional[int] = None
) -> ExperimentResult:
    """
    메모리에 있는 클래스별 이미지 묶음에 측정법을 적용하고 요약합니다.

    Args:
        groups (Dict[str, Sequence[np.ndarray]]): 클래스 이름 → 이미지 목록
        measure: 측정법 이름 또는 Measure
        workers (int): 작업자 수

    Returns:
        ExperimentResult: 표본별 값, 클래스별 요약 통계, 클래스 쌍별 Hedges' g
        (클래스가 하나면 effect_sizes는 None)
    """
    if not groups:
        raise InsufficientDataError("분류할 클래스가 없습니다.")
    measure = measure if isinstance(measure, Measure) else build_measure(measure)

    records = [
        (label, f"{label}[{k}]", 0, functools.partial(np.asarray, image))
        for label, images in groups.items()
        for k, image in enumerate(images)
    ]
    return _classification_result(records, measure, workers)


def synthetic_mix_groups(
    p_values: Sequence[float] = (0.2, 0.8),
    n_samples: int = 50,
    size: int = 100,
    seed: Optional[int] = None
) -> Dict[str, List[np.ndarray]]:
    """
    MIX_2D(p) 이미지로 만든 클래스별 합성 데이터셋 ('mix_p0.2' 형식의 클래스 이름)

    Examples:
        >>> groups = synthetic_mix_groups((0.2, 0.8), n_samples=2, size=10, seed=1)
        >>> list(groups)
        ['mix_p0.2', 'mix_p0.8']
    """
    seed = resolve_seed(seed)
    groups = {}
    for p in p_values:
        key = _probability_key(p)
        groups[f"mix_p{p:g}"] = [
            mix2d(p, size, size, derive_seed(seed, _GROUP_STREAM, key, k))
            for k in range(n_samples)
        ]
    return groups


def run_classification(
    dataset_path,
    pipeline: str = 'image',
    measure: Union[str, Measure] = 'graden',
    window_mode: str = 'sliding',
    window: Optional[int] = None,
    step: Optional[int] = None,
    embed_m: Optional[int] = None,
    image_size: Optional[int] = None,
    workers: Optional[int] = None
) -> ExperimentResult:
    """
    클래스별 하위 디렉터리 구조의 데이터셋에 분류 파이프라인을 적용합니다.

    - image: 흑백 변환 → image_size×image_size로 블록 평균 축소 → 측정
    - signal: 윈도우 분할(sliding 또는 prefix) → 거리행렬(임베딩 차원 embed_m) → 측정

    읽지 못한 파일과 윈도우를 만들 수 없는 신호는 경고 후 failures에 담깁니다.

    Args:
        dataset_path: 데이터셋 루트 디렉터리
        pipeline (str): 'image' 또는 'signal'
        measure: 측정법 이름 또는 Measure (기본값: 'graden')
        window_mode (str): 'sliding' 또는 'prefix' (신호 파이프라인)
        window (int): 윈도우 길이 (기본값: 150)
        step (int): 슬라이딩 간격 (기본값: 10)
        embed_m (int): 거리행렬 임베딩 차원 (기본값: 3)
        image_size (int): 축소 목표 크기 (기본값: 128)
        workers (int): 작업자 수

    Returns:
        ExperimentResult: 표본(윈도우)별 값, 클래스별 요약 통계, 클래스 쌍별 Hedges' g

    Raises:
        ParameterRangeError: 알 수 없는 파이프라인 또는 윈도우 방식일 때
        EmptyDatasetError: 읽을 수 있는 표본이 없을 때
    """
    if pipeline not in PIPELINES:
        raise ParameterRangeError(f"알 수 없는 파이프라인입니다: '{pipeline}' (가능: image, signal)")
    if window_mode not in WINDOW_MODES:
        raise ParameterRangeError(f"알 수 없는 윈도우 방식입니다: '{window_mode}' (가능: sliding, prefix)")

    window = int(get_config('transforms.window', 150) if window is None else window)
    step = int(get_config('transforms.step', 10) if step is None else step)
    embed_m = int(get_config('transforms.embed_m', 3) if embed_m is None else embed_m)
    image_size = int(get_config('transforms.image_size', 128) if image_size is None else image_size)
    measure = measure if isinstance(measure, Measure) else build_measure(measure)

    records = []
    if pipeline == 'image':
        samples, failures = load_dataset(dataset_path)
        for sample in samples:
            records.append((
                sample.label,
                sample.source,
                0,
                functools.partial(_prepare_image, sample.image, image_size, sample.source)
            ))
    else:
        samples, failures = load_signal_dataset(dataset_path)
        for sample in samples:
            try:
                if window_mode == 'sliding':
                    segments = sliding_windows(sample.data, window, step)
                else:
                    segments = [prefix_window(sample.data, window)]
            except GradEnError as e:
                logger.warning("⚠️ 윈도우를 만들 수 없어 제외합니다: %s (%s)", sample.source, e)
                failures.append(LoadFailure(source=sample.source, reason=str(e)))
                continue
            for index, segment in enumerate(segments):
                records.append((
                    sample.label,
                    sample.source,
                    index,
                    functools.partial(distance_matrix, segment, embed_m)
                ))

    if not records:
        raise InsufficientDataError(f"측정할 표본이 없습니다: {dataset_path}")

    logger.info("분류 파이프라인(%s): 표본 %d개, 측정법 %s", pipeline, len(records), measure.label)
    return _classification_result(records, measure, workers, failures)


def build_manifest(
    command: str,
    seed: int,
    parameters: Dict[str, Any],
    durations: Optional[Dict[str, float]] = None
) -> Dict[str, Any]:
    """
    실행 재현에 필요한 정보(명령, 시드, 파라미터, 버전, 시각, 소요 시간)를 담은 매니페스트를 만듭니다.
    """
    return {
        'toolkit': 'graden',
        'version': __version__,
        'command': command,
        'seed': int(seed),
        'parameters': dict(parameters),
        'created_at': datetime.now(timezone.utc).isoformat(timespec='seconds'),
        'durations': dict(durations or {})
    }


def validate_manifest(data: Any) -> Dict[str, Any]:
    """
    매니페스트를 검사하고 알려진 항목만 남겨 돌려줍니다.

    Raises:
        ManifestError: 딕셔너리가 아니거나, command/seed가 없거나, seed가 0 이상의 정수가 아닐 때

    Examples:
        >>> validate_manifest({'command': 'sweep', 'seed': 1})['parameters']
        {}
    """
    if not isinstance(data, dict):
        raise ManifestError("매니페스트는 JSON 객체여야 합니다.")
    for key in ('command', 'seed'):
        if key not in data:
            raise ManifestError(f"매니페스트에 '{key}' 항목이 없습니다.")

    seed = data['seed']
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise ManifestError(f"매니페스트의 seed는 0 이상의 정수여야 합니다: {seed!r}")
    if not isinstance(data['command'], str):
        raise ManifestError(f"매니페스트의 command는 문자열이어야 합니다: {data['command']!r}")

    parameters = data.get('parameters', {})
    if not isinstance(parameters, dict):
        raise ManifestError("매니페스트의 parameters는 JSON 객체여야 합니다.")

    unknown = sorted(set(data) - set(MANIFEST_FIELDS))
    if unknown:
        logger.warning("⚠️ 알 수 없는 매니페스트 항목을 무시합니다: %s", ', '.join(unknown))

    manifest = {key: data[key] for key in MANIFEST_FIELDS if key in data}
    manifest['parameters'] = parameters
    return manifest
