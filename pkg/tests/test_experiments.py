"""
실험 모듈 테스트
"""

import itertools
import logging
import math

import numpy as np
import pandas as pd
import pytest
from scipy import stats

from modules.config import reset_config, set_config
from modules.data_loader import save_image, table_to_text
from modules.exceptions import (
    EmptyDatasetError,
    InsufficientDataError,
    ManifestError,
    ParameterRangeError,
    UndefinedEntropyError
)
from modules.experiments import (
    MANIFEST_FIELDS,
    Measure,
    build_manifest,
    build_measure,
    classify_groups,
    run_benchmark,
    run_classification,
    run_logistic_sweep,
    run_mix_noise_robustness,
    run_noise_classification,
    run_robustness,
    sweep_thresholds,
    synthetic_mix_groups,
    validate_manifest,
    value_grid
)
from modules.generators import derive_seed, noise_image
from modules.graden import graden, quantile_thresholds
from modules.statistics import GroupSummary, iqr_disjoint


@pytest.fixture(autouse=True)
def _default_config(monkeypatch):
    monkeypatch.delenv('GRADEN_SEED', raising=False)
    reset_config()
    yield
    reset_config()


def summary_of(summaries, group):
    """요약 표의 한 행을 GroupSummary로"""
    row = summaries[summaries['group'] == group].iloc[0]
    return GroupSummary(**{key: row[key] for key in ('n', 'mean', 'std', 'min', 'q1', 'median', 'q3', 'max')})


def write_signal(path, values):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(f"{v:.10f}" for v in values))


class TestBuildMeasure:
    """측정법 생성 테스트"""

    def test_labels(self):
        """직접 지정한 파라미터만 라벨에 표시"""
        assert build_measure('graden').label == 'graden'
        assert build_measure('sampen2d', m=1).label == 'sampen2d(m=1)'
        assert build_measure('distren2d', m=2, bins=64).label == 'distren2d(m=2, bins=64)'
        assert build_measure('peren2d').label == 'peren2d'

    def test_none_means_default(self):
        """None 파라미터는 기본값"""
        assert build_measure('sampen2d', m=None, r=None).label == 'sampen2d'

    def test_equality_ignores_function(self):
        """이름과 파라미터가 같으면 같은 측정법"""
        assert build_measure('distren2d', m=1) == build_measure('distren2d', m=1)
        assert isinstance(build_measure('graden'), Measure)

    def test_unknown_measure(self):
        """알 수 없는 측정법은 오류"""
        with pytest.raises(ParameterRangeError):
            build_measure('fuzzyen2d')

    def test_foreign_parameter(self):
        """다른 측정법의 파라미터는 오류"""
        with pytest.raises(ParameterRangeError, match='bins'):
            build_measure('sampen2d', bins=32)

    def test_threshold_range_checked_up_front(self):
        """분위수 범위는 측정 전에 검사"""
        with pytest.raises(ParameterRangeError):
            build_measure('graden', a=0.8)

    def test_delta_gamma_equivalent_to_quantiles(self):
        """(δ, γ) 직접 지정 = 같은 값의 분위수 수준"""
        image = np.random.default_rng(1).uniform(0, 255, size=(30, 30))
        by_quantile = build_measure('graden', a=0.6, b=0.9)
        by_value = build_measure('graden', delta=float(stats.norm.ppf(0.6)), gamma=float(stats.norm.ppf(0.9)))
        assert by_value(image) == by_quantile(image)

    def test_config_defaults(self):
        """기본 임계값은 설정에서 읽음"""
        image = np.random.default_rng(2).uniform(0, 255, size=(20, 20))
        set_config('graden.a', 0.6)
        assert build_measure('graden')(image) == graden(image, quantile_thresholds(0.6, 0.8))

    def test_strict_sampen(self):
        """strict=True면 정의되지 않는 SampEn2D가 오류, 아니면 NaN"""
        image = np.arange(25.0).reshape(5, 5) ** 2
        with pytest.raises(UndefinedEntropyError):
            build_measure('sampen2d', strict=True, m=1, r=0.01)(image)
        assert math.isnan(build_measure('sampen2d', m=1, r=0.01)(image))


class TestValueGrid:
    """격자 생성 테스트"""

    def test_default_grids(self):
        """0.51~0.74 → 24개, 0.76~0.95 → 20개"""
        a_values = value_grid(0.51, 0.74, 0.01)
        b_values = value_grid(0.76, 0.95, 0.01)
        assert len(a_values) == 24
        assert len(b_values) == 20
        assert a_values[-1] == 0.74
        assert b_values[-1] == 0.95

    def test_single_point(self):
        """시작 = 끝 → 1개"""
        assert value_grid(0.55, 0.55, 0.01).tolist() == [0.55]

    def test_invalid(self):
        """간격 ≤ 0 또는 끝 < 시작은 오류"""
        with pytest.raises(ParameterRangeError):
            value_grid(0.5, 0.6, 0.0)
        with pytest.raises(ParameterRangeError):
            value_grid(0.6, 0.5, 0.01)


class TestSweepThresholds:
    """임계값 스윕 테스트"""

    def test_grid_shape(self):
        """기본 격자 24×20, a 바깥·b 안쪽 순서"""
        table = sweep_thresholds(size=20, seed=1).table
        assert list(table.columns) == ['experiment', 'measure', 'a', 'b', 'value']
        assert len(table) == 24 * 20
        assert table['a'].iloc[:20].eq(0.51).all()
        assert table['b'].iloc[:20].tolist() == value_grid(0.76, 0.95, 0.01).tolist()
        assert table['value'].between(0.0, 1.0).all()

    def test_single_point_matches_graden(self):
        """1×1 격자의 값은 같은 이미지의 GradEn"""
        table = sweep_thresholds(size=24, a_range=(0.55, 0.55), b_range=(0.8, 0.8), seed=5).table
        image = noise_image('white', 24, 24, derive_seed(5, 0))
        assert len(table) == 1
        assert table['value'].iloc[0] == pytest.approx(graden(image), abs=1e-12)

    def test_deterministic_and_worker_independent(self):
        """같은 시드 → 같은 표 (작업자 수와 무관)"""
        first = sweep_thresholds(size=16, a_range=(0.52, 0.6), b_range=(0.8, 0.85), seed=3, workers=1)
        second = sweep_thresholds(size=16, a_range=(0.52, 0.6), b_range=(0.8, 0.85), seed=3, workers=4)
        pd.testing.assert_frame_equal(first.table, second.table)

    def test_out_of_range_grid(self):
        """분위수 범위를 벗어난 격자는 오류"""
        with pytest.raises(ParameterRangeError):
            sweep_thresholds(size=16, a_range=(0.45, 0.55), seed=1)

    def test_unknown_noise(self):
        """알 수 없는 잡음은 오류"""
        with pytest.raises(ParameterRangeError):
            sweep_thresholds(size=16, noise='green', seed=1)


class TestNoiseClassification:
    """유색 잡음 분류 테스트"""

    def test_minimum_run(self):
        """표본 2개 → 값 8개, 요약 4행, 효과크기 6행"""
        result = run_noise_classification(n_samples=2, size=16, measures=['graden'], seed=11)
        assert len(result.table) == 8
        assert result.summaries['group'].tolist() == ['white', 'pink', 'blue', 'red']
        assert result.summaries['n'].tolist() == [2, 2, 2, 2]
        assert len(result.effect_sizes) == 6

    def test_sample_seeds(self):
        """표본 이미지의 시드는 (기본 시드, 잡음 위치, 표본 번호)"""
        table = run_noise_classification(n_samples=2, size=16, measures=['graden'], seed=11).table
        row = table[(table['noise'] == 'pink') & (table['sample'] == 1)].iloc[0]
        expected = graden(noise_image('pink', 16, 16, derive_seed(11, 1, 1)))
        assert row['value'] == expected

    def test_csv_bytes_identical(self):
        """같은 시드 두 번 → 같은 CSV"""
        kwargs = dict(n_samples=2, size=12, measures=['graden', 'peren2d'], seed=4)
        first = run_noise_classification(**kwargs, workers=1)
        second = run_noise_classification(**kwargs, workers=3)
        assert table_to_text(first.table) == table_to_text(second.table)

    def test_single_sample(self):
        """표본 1개는 오류"""
        with pytest.raises(InsufficientDataError):
            run_noise_classification(n_samples=1, size=16, measures=['graden'], seed=1)

    def test_invalid_workers(self):
        """작업자 수 0은 오류"""
        with pytest.raises(ParameterRangeError):
            run_noise_classification(n_samples=2, size=12, measures=['graden'], seed=1, workers=0)


class TestRobustness:
    """변동계수 강건성 테스트"""

    def test_single_size(self):
        """크기 하나, 표본 2개 → 측정법당 CV 하나"""
        table = run_robustness(sizes=[12], n_samples=2, measures=['graden', 'peren2d'], seed=2).table
        assert list(table.columns) == ['experiment', 'measure', 'noise', 'size', 'n', 'value']
        assert len(table) == 2
        assert table['n'].tolist() == [2, 2]
        assert (table['value'] >= 0).all()

    def test_size_order_independent(self):
        """크기 목록 순서를 바꿔도 크기별 값은 같음"""
        forward = run_robustness(sizes=[10, 14], n_samples=3, measures=['graden'], seed=6).table
        backward = run_robustness(sizes=[14, 10], n_samples=3, measures=['graden'], seed=6).table
        assert forward.set_index('size')['value'].to_dict() == backward.set_index('size')['value'].to_dict()

    def test_undefined_values_dropped(self, caplog):
        """정의되지 않은 SampEn2D 값은 경고 후 제외"""
        measure = build_measure('sampen2d', m=1, r=0.01)
        with caplog.at_level(logging.WARNING, logger='modules.experiments'):
            table = run_robustness(sizes=[6], n_samples=3, measures=[measure], seed=3).table
        assert table['n'].iloc[0] <= 3
        assert '⚠️' in caplog.text

    def test_invalid_noise(self):
        """알 수 없는 잡음 종류는 오류"""
        with pytest.raises(ParameterRangeError):
            run_robustness(sizes=[10], n_samples=2, measures=['graden'], noise_types=['green'], seed=1)


class TestMixNoiseRobustness:
    """MIX + 잡음 강건성 테스트"""

    def test_zero_noise_sine_has_zero_cv(self):
        """p=0, 분산 0 → 모든 이미지가 같으므로 CV 0"""
        table = run_mix_noise_robustness(
            p_values=[0.0], noise_variances=[0.0], n_samples=3, size=24, measures=['graden'], seed=1
        ).table
        assert list(table.columns) == ['experiment', 'measure', 'p', 'n', 'value']
        assert table['value'].iloc[0] == 0.0
        assert table['n'].iloc[0] == 3

    def test_p_order_independent(self):
        """p 목록 순서를 바꿔도 p별 값은 같음"""
        kwargs = dict(noise_variances=[0.01, 0.02], n_samples=2, size=16, measures=['graden'], seed=8)
        forward = run_mix_noise_robustness(p_values=[0.2, 0.5], **kwargs).table
        backward = run_mix_noise_robustness(p_values=[0.5, 0.2], **kwargs).table
        assert forward.set_index('p')['value'].to_dict() == backward.set_index('p')['value'].to_dict()

    def test_too_few_images(self):
        """p별 이미지가 2개 미만이면 오류"""
        with pytest.raises(InsufficientDataError):
            run_mix_noise_robustness(p_values=[0.5], noise_variances=[0.01], n_samples=1, size=16, seed=1)


class TestLogisticSweep:
    """로지스틱 사상 스윕 테스트"""

    def test_default_grid(self):
        """3.5~4.0, 0.01 간격 → 51개 값"""
        result = run_logistic_sweep(n=40, measures=['graden', 'peren2d'])
        assert len(result.table) == 2 * 51
        assert result.table['a'].iloc[0] == 3.5
        assert result.table['a'].iloc[50] == 4.0
        assert list(result.summaries.columns) == ['measure', 'spearman', 'p_value']
        assert result.summaries['measure'].tolist() == ['graden', 'peren2d']

    def test_single_point_has_no_correlation(self, caplog):
        """값이 하나면 순위상관은 NaN과 경고"""
        with caplog.at_level(logging.WARNING, logger='modules.experiments'):
            result = run_logistic_sweep(a_range=(3.9, 3.9), n=30, measures=['graden'])
        assert len(result.table) == 1
        assert math.isnan(result.summaries['spearman'].iloc[0])
        assert '순위상관' in caplog.text


class TestBenchmark:
    """계산 시간 측정 테스트"""

    def test_mocked_timer(self, mocker):
        """반복 1회, 가짜 시계 → 모든 칸 0.5초"""
        timer = mocker.Mock(side_effect=itertools.count(0.0, 0.5))
        table = run_benchmark(
            sizes=[8, 12], measures=['graden', build_measure('distren2d', m=1)], repeats=1, seed=1, timer=timer
        ).table
        assert list(table.columns) == ['measure', '8*8', '12*12']
        assert table['measure'].tolist() == ['graden', 'distren2d(m=1)']
        assert (table[['8*8', '12*12']] == 0.5).all().all()
        assert timer.call_count == 2 * 2 * 2

    def test_median_of_repeats(self):
        """반복 측정의 중앙값"""
        ticks = iter([0.0, 1.0, 1.0, 4.0, 4.0, 6.0])
        table = run_benchmark(sizes=[8], measures=['graden'], repeats=3, seed=1, timer=lambda: next(ticks)).table
        assert table['8*8'].iloc[0] == 2.0

    def test_default_measures(self):
        """기본 측정법: SampEn2D m=1~3, DistrEn2D m=1~3, GradEn"""
        table = run_benchmark(sizes=[6], repeats=1, seed=1, timer=itertools.count().__next__).table
        assert table['measure'].tolist() == [
            'sampen2d(m=1)', 'sampen2d(m=2)', 'sampen2d(m=3)',
            'distren2d(m=1)', 'distren2d(m=2)', 'distren2d(m=3)',
            'graden'
        ]

    def test_invalid_repeats(self):
        """반복 0회는 오류"""
        with pytest.raises(ParameterRangeError):
            run_benchmark(sizes=[8], measures=['graden'], repeats=0, seed=1)


class TestClassification:
    """분류 파이프라인 테스트"""

    def test_one_class(self):
        """클래스 하나 → 요약만, 효과크기 없음"""
        images = [noise_image('white', 12, 12, seed) for seed in range(3)]
        result = classify_groups({'only': images})
        assert result.effect_sizes is None
        assert result.summaries['group'].tolist() == ['only']
        assert result.summaries['n'].iloc[0] == 3

    def test_identical_classes(self):
        """같은 이미지 묶음 두 클래스 → g = 0"""
        images = [noise_image('pink', 16, 16, seed) for seed in range(4)]
        result = classify_groups({'a': images, 'b': list(images)}, measure='graden', workers=2)
        assert result.effect_sizes['g'].tolist() == [0.0]

    def test_degenerate_pair_skipped(self, caplog):
        """분산이 0인 쌍만 경고 후 제외, 나머지 쌍은 유지"""
        groups = {
            'flat_a': [np.full((12, 12), 1.0), np.full((12, 12), 2.0)],
            'flat_b': [np.full((12, 12), 3.0), np.full((12, 12), 4.0)],
            'noise': [noise_image('white', 12, 12, seed) for seed in range(3)]
        }
        with caplog.at_level(logging.WARNING, logger='modules.statistics'):
            result = classify_groups(groups, measure='graden')

        pairs = list(zip(result.effect_sizes['group1'], result.effect_sizes['group2']))
        assert pairs == [('flat_a', 'noise'), ('flat_b', 'noise')]
        assert 'flat_a vs flat_b' in caplog.text

    def test_empty_groups(self):
        """클래스가 없으면 오류"""
        with pytest.raises(InsufficientDataError):
            classify_groups({})

    def test_synthetic_mix_groups(self):
        """MIX p별 클래스"""
        groups = synthetic_mix_groups((0.2, 0.8), n_samples=2, size=10, seed=1)
        assert list(groups) == ['mix_p0.2', 'mix_p0.8']
        assert groups['mix_p0.8'][1].shape == (10, 10)
        assert not np.array_equal(groups['mix_p0.2'][0], groups['mix_p0.2'][1])

    def test_image_pipeline(self, tmp_path, caplog):
        """이미지 데이터셋: 큰 이미지는 축소, 작은 이미지는 경고 후 그대로"""
        rng = np.random.default_rng(9)
        for label in ('cats', 'dogs'):
            for k in range(2):
                save_image(tmp_path / label / f"{k}.pgm", rng.uniform(0, 1, size=(20, 20)))
        save_image(tmp_path / 'dogs' / 'small.pgm', rng.uniform(0, 1, size=(6, 6)))

        with caplog.at_level(logging.WARNING, logger='modules.experiments'):
            result = run_classification(tmp_path, pipeline='image', image_size=8)

        table = result.table
        assert list(table.columns) == ['experiment', 'measure', 'label', 'source', 'window', 'value']
        assert table['label'].tolist() == ['cats', 'cats', 'dogs', 'dogs', 'dogs']
        assert 'small.pgm' in caplog.text
        assert result.summaries['group'].tolist() == ['cats', 'dogs']
        assert len(result.effect_sizes) == 1
        assert result.failures == []

    def test_signal_pipeline(self, tmp_path):
        """신호 데이터셋: 슬라이딩 윈도우 → 거리행렬"""
        rng = np.random.default_rng(10)
        write_signal(tmp_path / 'healthy' / 'a.txt', np.sin(np.arange(200) / 3.0))
        write_signal(tmp_path / 'fault' / 'b.txt', rng.standard_normal(200))

        sliding = run_classification(tmp_path, pipeline='signal', window=50, step=50, embed_m=2).table
        assert len(sliding) == 8
        assert sliding['window'].tolist() == [0, 1, 2, 3, 0, 1, 2, 3]
        assert sliding['label'].iloc[0] == 'fault'

        prefix = run_classification(tmp_path, pipeline='signal', window_mode='prefix', window=50).table
        assert len(prefix) == 2

    def test_short_signal_recorded_as_failure(self, tmp_path):
        """윈도우보다 짧은 신호는 실패 목록에 담고 계속"""
        write_signal(tmp_path / 'x' / 'long.txt', np.random.default_rng(11).standard_normal(120))
        write_signal(tmp_path / 'x' / 'short.txt', np.arange(30.0))

        result = run_classification(tmp_path, pipeline='signal', window=60, step=30)
        assert len(result.failures) == 1
        assert result.failures[0].source.endswith('short.txt')
        assert len(result.table) == 3

    def test_empty_dataset(self, tmp_path):
        """표본이 없으면 오류"""
        (tmp_path / 'empty_class').mkdir()
        with pytest.raises(EmptyDatasetError):
            run_classification(tmp_path)

    def test_invalid_pipeline(self, tmp_path):
        """알 수 없는 파이프라인이나 윈도우 방식은 오류"""
        with pytest.raises(ParameterRangeError):
            run_classification(tmp_path, pipeline='audio')
        with pytest.raises(ParameterRangeError):
            run_classification(tmp_path, pipeline='signal', window_mode='tumbling')


class TestManifest:
    """매니페스트 테스트"""

    def test_build_manifest(self):
        """재현에 필요한 항목"""
        manifest = build_manifest('sweep', 42, {'size': 100}, {'total_seconds': 1.5})
        assert tuple(manifest) == MANIFEST_FIELDS
        assert manifest['toolkit'] == 'graden'
        assert manifest['seed'] == 42
        assert manifest['parameters'] == {'size': 100}

    def test_round_trip(self):
        """만든 매니페스트는 그대로 통과"""
        manifest = build_manifest('logistic', 7, {'step': 0.01})
        assert validate_manifest(manifest) == manifest

    def test_missing_parameters_default(self):
        """parameters가 없으면 빈 딕셔너리"""
        assert validate_manifest({'command': 'bench', 'seed': 0})['parameters'] == {}

    @pytest.mark.parametrize('data', [
        [],
        {'seed': 1},
        {'command': 'sweep'},
        {'command': 'sweep', 'seed': -1},
        {'command': 'sweep', 'seed': True},
        {'command': 'sweep', 'seed': '3'},
        {'command': 5, 'seed': 3},
        {'command': 'sweep', 'seed': 3, 'parameters': [1, 2]}
    ])
    def test_invalid(self, data):
        """필수 항목이 없거나 형식이 틀리면 오류"""
        with pytest.raises(ManifestError):
            validate_manifest(data)

    def test_unknown_field_warns(self, caplog):
        """알 수 없는 항목은 경고 후 무시"""
        with caplog.at_level(logging.WARNING, logger='modules.experiments'):
            manifest = validate_manifest({'command': 'sweep', 'seed': 1, 'host': 'lab-pc'})
        assert 'host' not in manifest
        assert 'host' in caplog.text


@pytest.mark.slow
class TestExperimentScale:
    """실험 규모의 검증 (느린 테스트)"""

    def test_default_thresholds_near_plateau_top(self):
        """100×100 백색 잡음: (0.55, 0.80)은 격자 상위 25%, 최댓값은 권장 영역 (a 0.53~0.6, b 0.8~0.86) 부근"""
        table = sweep_thresholds(size=100, seed=42).table
        value = table[np.isclose(table['a'], 0.55) & np.isclose(table['b'], 0.8)]['value'].iloc[0]
        assert value >= table['value'].quantile(0.75)

        best = table.loc[table['value'].idxmax()]
        assert 0.53 - 1e-9 <= best['a'] <= 0.6 + 1e-9
        # 정규분포 기울기는 (0.6, 0.8)에서 다섯 기호가 같은 확률
        assert 0.79 - 1e-9 <= best['b'] <= 0.86 + 1e-9

    def test_noise_types_iqr_disjoint(self):
        """50개씩 100×100: 네 잡음의 GradEn 사분위 범위가 서로 겹치지 않음"""
        summaries = run_noise_classification(n_samples=50, size=100, measures=['graden'], seed=42).summaries
        for first, second in itertools.combinations(['white', 'pink', 'blue', 'red'], 2):
            assert iqr_disjoint(summary_of(summaries, first), summary_of(summaries, second))

    def test_graden_cv_below_distren(self):
        """크기 20~100에서 GradEn CV가 DistrEn2D보다 작은 크기가 5개 중 4개 이상"""
        table = run_robustness(
            sizes=[20, 40, 60, 80, 100], n_samples=30, measures=['graden', 'distren2d'], seed=42
        ).table
        cv = table.pivot(index='size', columns='measure', values='value')
        assert (cv['graden'] < cv['distren2d']).sum() >= 4

    def test_mix_graden_cv_lowest(self):
        """MIX + 잡음 100×100: p마다 GradEn CV가 SampEn2D(m=1), DistrEn2D보다 작음"""
        sampen = build_measure('sampen2d', m=1)
        table = run_mix_noise_robustness(
            n_samples=2, size=100, measures=['graden', sampen, 'distren2d'], seed=42, workers=4
        ).table
        cv = table.pivot(index='p', columns='measure', values='value')
        assert np.isfinite(cv.to_numpy()).all()
        assert (table['n'] == 10).all()
        assert (cv['graden'] < cv[sampen.label]).all()
        assert (cv['graden'] < cv['distren2d']).all()

    def test_logistic_periodic_window(self):
        """주기 3 구간의 GradEn < a=4.0, 순위상관 양수, PerEn2D는 구분 약함"""
        result = run_logistic_sweep(measures=['graden', 'peren2d'])
        table = result.table
        window = table['a'].between(3.83 - 1e-9, 3.84 + 1e-9)
        chaotic = np.isclose(table['a'], 4.0)

        graden_rows = table['measure'] == 'graden'
        assert (table[graden_rows & window]['value'] < table[graden_rows & chaotic]['value'].iloc[0]).all()

        correlations = result.summaries.set_index('measure')['spearman']
        assert correlations['graden'] > 0

        peren_rows = table['measure'] == 'peren2d'
        periodic = table[peren_rows & window]['value']
        reference = table[peren_rows & chaotic]['value'].iloc[0]
        separated = (periodic < reference).all()
        relative_gap = (reference - periodic.max()) / reference
        assert not separated or relative_gap < 0.1

    def test_graden_speed(self):
        """80×80에서 GradEn이 SampEn2D(m=1)보다 10배 이상 빠르고, 시간은 픽셀 수에 대략 비례"""
        table = run_benchmark(
            sizes=[80], measures=['graden', build_measure('sampen2d', m=1)], repeats=1, seed=42
        ).table.set_index('measure')
        assert table.loc['graden', '80*80'] * 10 <= table.loc['sampen2d(m=1)', '80*80']

        scaling = run_benchmark(sizes=[40, 80, 160], measures=['graden'], repeats=5, seed=42).table
        assert scaling['160*160'].iloc[0] <= 32 * scaling['40*40'].iloc[0]

    def test_mix_classes_effect_size(self):
        """MIX 0.2 vs 0.8, 50개씩: |g| > 1"""
        result = classify_groups(synthetic_mix_groups(seed=42), measure='graden')
        assert abs(result.effect_sizes['g'].iloc[0]) > 1


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
