"""
명령행 모듈

compute / simulate 와 각 실험(sweep, noise-class, robustness, mix-robustness,
logistic, bench, classify), 그리고 매니페스트로 실험을 다시 실행하는 rerun
하위 명령을 제공합니다.

종료 코드:
    0: 성공
    1: 데이터/계산 오류 (오류 메시지는 표준 오류에 한 줄)
    2: 사용법 오류 (argparse)
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from modules import __version__
from modules.config import get_config, resolve_seed
from modules.data_loader import (
    IMAGE_SUFFIXES,
    SIGNAL_SUFFIXES,
    TABLE_FORMATS,
    load_image,
    load_json,
    load_signal,
    save_image,
    save_json,
    save_signal,
    save_table,
    table_to_text
)
from modules.exceptions import GradEnError, ManifestError, UnsupportedFormatError
from modules.experiments import (
    MEASURE_NAMES,
    MEASURE_PARAMETERS,
    ExperimentResult,
    build_manifest,
    build_measure,
    run_benchmark,
    run_classification,
    run_logistic_sweep,
    run_mix_noise_robustness,
    run_noise_classification,
    run_robustness,
    sweep_thresholds,
    validate_manifest
)
from modules.generators import (
    NOISE_BETAS,
    derive_seed,
    logistic_series,
    mix2d,
    noise_image
)
from modules.graden import graden_histogram, thresholds_from_config
from modules.transforms import distance_matrix


logger = logging.getLogger(__name__)

# 매니페스트 parameters에 넣지 않는 실행 옵션
_RUNTIME_OPTIONS = ('command', 'handler', 'out', 'format', 'verbose', 'seed')


def _one_line(error: Exception) -> str:
    return ' '.join(str(error).split())


def _measure_params(args: argparse.Namespace, name: str) -> Dict[str, Any]:
    """명령행 측정 파라미터 중 해당 측정법이 쓰는 것만 고릅니다."""
    params = {}
    for key in ('a', 'b', 'delta', 'gamma', 'm', 'r', 'bins'):
        value = getattr(args, key, None)
        if value is None:
            continue
        if key in MEASURE_PARAMETERS[name]:
            params[key] = value
        else:
            logger.debug("%s에는 --%s 옵션을 사용하지 않습니다.", name, key)
    return params


def _measures_from_args(args: argparse.Namespace, config_path: Optional[str] = None) -> Optional[List]:
    """--measures (없으면 설정의 기본 측정법 목록)에 측정 파라미터를 적용합니다."""
    names = args.measures
    if not names and config_path is not None:
        names = get_config(config_path, [])
    if not names:
        return None
    return [build_measure(name, **_measure_params(args, name)) for name in names]


def _suffixed(out: Path, tag: str) -> Path:
    """res.csv → res.<tag>.csv"""
    return out.with_name(f"{out.stem}.{tag}{out.suffix}")


def manifest_path(out) -> Path:
    """결과 파일 옆의 매니페스트 경로 (<out>.manifest.json)"""
    out = Path(out)
    return out.with_name(out.name + '.manifest.json')


def _write_result(result: ExperimentResult, out: Optional[str], fmt: str) -> None:
    if out is None:
        sys.stdout.write(table_to_text(result.table, fmt))
        return

    out = Path(out)
    save_table(result.table, out, fmt)
    if result.summaries is not None:
        save_table(result.summaries, _suffixed(out, 'summary'), fmt)
    if result.effect_sizes is not None:
        save_table(result.effect_sizes, _suffixed(out, 'effects'), fmt)
    logger.info("결과 저장: %s", out)


def _run_experiment(args: argparse.Namespace, runner: Callable[[argparse.Namespace, int], ExperimentResult]) -> int:
    """실험을 실행하고 결과 표와 매니페스트를 저장합니다."""
    seed = resolve_seed(args.seed)
    started = time.perf_counter()
    result = runner(args, seed)
    elapsed = time.perf_counter() - started

    for failure in result.failures:
        print(f"제외된 파일: {failure.source} ({failure.reason})", file=sys.stderr)

    _write_result(result, args.out, args.format)

    if args.out is not None:
        parameters = {
            key: value for key, value in vars(args).items()
            if key not in _RUNTIME_OPTIONS
        }
        manifest = build_manifest(args.command, seed, parameters, {'total_seconds': round(elapsed, 6)})
        save_json(manifest, manifest_path(args.out))
    else:
        logger.debug("--out이 없어 매니페스트를 저장하지 않습니다.")

    return 0


# ============================================
# compute / simulate
# ============================================

def _load_input(path: str, embed_m: Optional[int]):
    suffix = Path(path).suffix.lower()
    if suffix in IMAGE_SUFFIXES:
        return load_image(path)
    if suffix in SIGNAL_SUFFIXES:
        series = load_signal(path)
        return distance_matrix(series, 3 if embed_m is None else embed_m)
    raise UnsupportedFormatError(
        f"지원하지 않는 입력 형식입니다: {path} "
        f"(가능: {', '.join(IMAGE_SUFFIXES + SIGNAL_SUFFIXES)})"
    )


def cmd_compute(args: argparse.Namespace) -> int:
    """이미지 또는 신호 파일 하나의 엔트로피를 출력합니다."""
    image = _load_input(args.path, args.embed_m)
    measure = build_measure(args.measure, strict=True, **_measure_params(args, args.measure))
    value = measure(image)
    print(f"{value:.6f}")

    histogram = None
    if args.histogram:
        if args.measure != 'graden':
            logger.warning("⚠️ --histogram은 graden에서만 사용할 수 있습니다.")
        else:
            thresholds = thresholds_from_config(args.a, args.b, args.delta, args.gamma)
            histogram = graden_histogram(image, thresholds).to_list()
            print(json.dumps(histogram))

    if args.out is not None:
        record = {'path': args.path, 'measure': measure.label, 'value': value}
        if histogram is not None:
            record['histogram'] = histogram
        save_json(record, args.out)

    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    """
    모의 데이터를 저장합니다.

    이미지는 PGM으로, 로지스틱 수열은 --format에 따라 헤더 없는 CSV(한 줄에 값 하나)
    또는 JSON 목록으로 저장하고 거리행렬 이미지를 PGM으로 함께 저장합니다.
    """
    seed = resolve_seed(args.seed)
    out_dir = Path(args.out)

    for k in range(args.count):
        sample_seed = derive_seed(seed, k)
        name = f"{args.kind}_{k:03d}"

        if args.kind == 'logistic':
            series = logistic_series(args.control, args.x0, args.length, args.burn_in)
            save_signal(out_dir / f"{name}.{args.format}", series, args.format)
            save_image(out_dir / f"{name}.pgm", distance_matrix(series, args.embed_m))
            continue

        if args.kind == 'noise':
            image = noise_image(args.noise, args.size, args.size, sample_seed)
        else:
            image = mix2d(args.p, args.size, args.size, sample_seed)
        save_image(out_dir / f"{name}.pgm", image)

    logger.info("모의 데이터 %d개 저장: %s", args.count, out_dir)
    return 0


# ============================================
# 실험 명령
# ============================================

def _sweep(args, seed):
    return sweep_thresholds(
        size=args.size,
        a_range=args.a_range,
        b_range=args.b_range,
        step=args.step,
        seed=seed,
        noise=args.noise,
        workers=args.workers
    )


def _noise_class(args, seed):
    return run_noise_classification(
        n_samples=args.samples,
        size=args.size,
        measures=_measures_from_args(args, 'experiments.noise_class.measures'),
        seed=seed,
        workers=args.workers
    )


def _robustness(args, seed):
    return run_robustness(
        sizes=args.sizes,
        n_samples=args.samples,
        measures=_measures_from_args(args, 'experiments.robustness.measures'),
        noise_types=args.noise_types,
        seed=seed,
        workers=args.workers
    )


def _mix_robustness(args, seed):
    return run_mix_noise_robustness(
        p_values=args.p_values,
        noise_variances=args.variances,
        n_samples=args.samples,
        size=args.size,
        measures=_measures_from_args(args, 'experiments.mix_robustness.measures'),
        seed=seed,
        workers=args.workers
    )


def _logistic(args, seed):
    return run_logistic_sweep(
        a_range=args.a_range,
        step=args.step,
        n=args.length,
        m=args.embed_m,
        measures=_measures_from_args(args, 'experiments.logistic.measures'),
        x0=args.x0,
        burn_in=args.burn_in,
        workers=args.workers
    )


def _bench(args, seed):
    return run_benchmark(
        sizes=args.sizes,
        measures=_measures_from_args(args),
        repeats=args.repeats,
        seed=seed
    )


def _classify(args, seed):
    return run_classification(
        args.dataset,
        pipeline=args.pipeline,
        measure=build_measure(args.measure, **_measure_params(args, args.measure)),
        window_mode=args.window_mode,
        window=args.window,
        step=args.step,
        embed_m=args.embed_m,
        image_size=args.image_size,
        workers=args.workers
    )


EXPERIMENTS = {
    'sweep': _sweep,
    'noise-class': _noise_class,
    'robustness': _robustness,
    'mix-robustness': _mix_robustness,
    'logistic': _logistic,
    'bench': _bench,
    'classify': _classify
}


def cmd_experiment(args: argparse.Namespace) -> int:
    return _run_experiment(args, EXPERIMENTS[args.command])


def _subcommand_parsers(parser: argparse.ArgumentParser) -> Dict[str, argparse.ArgumentParser]:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices
    return {}


def cmd_rerun(args: argparse.Namespace) -> int:
    """매니페스트에 기록된 명령을 같은 파라미터와 시드로 다시 실행합니다."""
    manifest = validate_manifest(load_json(args.manifest))
    command = manifest['command']
    if command not in EXPERIMENTS:
        raise ManifestError(f"다시 실행할 수 없는 명령입니다: '{command}'")

    subparser = _subcommand_parsers(build_parser())[command]
    namespace = {
        action.dest: action.default
        for action in subparser._actions
        if action.dest != 'help'
    }

    unknown = sorted(set(manifest['parameters']) - set(namespace))
    if unknown:
        logger.warning("⚠️ 알 수 없는 매개변수를 무시합니다: %s", ', '.join(unknown))
    namespace.update({key: value for key, value in manifest['parameters'].items() if key in namespace})
    namespace.update(command=command, seed=manifest['seed'], out=args.out, format=args.format, verbose=args.verbose)

    logger.info("다시 실행: %s (seed=%d)", command, manifest['seed'])
    return cmd_experiment(argparse.Namespace(**namespace))


# ============================================
# 파서
# ============================================

def _output_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--out', help='결과 파일 경로 (없으면 CSV를 표준 출력으로)')
    parent.add_argument('--format', choices=TABLE_FORMATS, default='csv', help='결과 형식 (기본값: csv)')
    parent.add_argument('-v', '--verbose', action='store_true', help='디버그 로그 출력')
    return parent


def _run_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--seed', type=int, help='기본 시드 (없으면 GRADEN_SEED 또는 설정값)')
    parent.add_argument('--workers', type=int, help='실험 작업자 수 (기본값: 설정값)')
    return parent


def _measure_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group('측정 파라미터')
    group.add_argument('--a', type=float, help='GradEn δ의 분위수 수준 (0.5, 0.75)')
    group.add_argument('--b', type=float, help='GradEn γ의 분위수 수준 (0.75, 1)')
    group.add_argument('--delta', type=float, help='GradEn δ 직접 지정 (--gamma와 함께)')
    group.add_argument('--gamma', type=float, help='GradEn γ 직접 지정 (--delta와 함께)')
    group.add_argument('--m', type=int, help='SampEn2D/DistrEn2D 창 크기')
    group.add_argument('--r', type=float, help='SampEn2D 허용 오차 비율')
    group.add_argument('--bins', type=int, help='DistrEn2D 히스토그램 구간 수')
    return parent


def build_parser() -> argparse.ArgumentParser:
    """명령행 파서를 만듭니다."""
    parser = argparse.ArgumentParser(
        prog='graden',
        description='GradEn 이미지 불규칙성 측정 및 비교 실험 도구'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    output = _output_options()
    run = _run_options()
    measure = _measure_options()
    measure_choices = list(MEASURE_NAMES)

    # compute
    p = subparsers.add_parser('compute', parents=[output, measure], help='파일 하나의 엔트로피 계산')
    p.add_argument('path', help='이미지(.pgm/.ppm/.png) 또는 신호(.txt/.csv/.xlsx) 파일')
    p.add_argument('--measure', choices=measure_choices, default='graden')
    p.add_argument('--embed-m', type=int, help='신호 입력의 거리행렬 임베딩 차원 (기본값: 3)')
    p.add_argument('--histogram', action='store_true', help='GradEn 125개 패턴 빈도를 JSON으로 함께 출력')
    p.set_defaults(handler=cmd_compute)

    # simulate
    p = subparsers.add_parser('simulate', parents=[run], help='모의 데이터 생성')
    p.add_argument('--kind', choices=['noise', 'mix', 'logistic'], default='noise')
    p.add_argument('--out', required=True, help='저장할 디렉터리')
    p.add_argument('--format', choices=TABLE_FORMATS, default='csv', help='로지스틱 수열 파일 형식 (기본값: csv)')
    p.add_argument('--count', type=int, default=1)
    p.add_argument('--size', type=int, default=100)
    p.add_argument('--noise', choices=list(NOISE_BETAS), default='white')
    p.add_argument('--p', type=float, default=0.5, help='MIX 확률')
    p.add_argument('--control', type=float, default=4.0, help='로지스틱 제어 파라미터 a')
    p.add_argument('--x0', type=float, default=0.3)
    p.add_argument('--length', type=int, default=150)
    p.add_argument('--burn-in', type=int, default=0)
    p.add_argument('--embed-m', type=int, default=3)
    p.add_argument('-v', '--verbose', action='store_true', help='디버그 로그 출력')
    p.set_defaults(handler=cmd_simulate)

    # sweep
    p = subparsers.add_parser('sweep', parents=[output, run], help='(a, b) 임계값 격자 스윕')
    p.add_argument('--size', type=int)
    p.add_argument('--a-range', type=float, nargs=2, metavar=('START', 'STOP'))
    p.add_argument('--b-range', type=float, nargs=2, metavar=('START', 'STOP'))
    p.add_argument('--step', type=float)
    p.add_argument('--noise', choices=list(NOISE_BETAS), default='white')
    p.set_defaults(handler=cmd_experiment)

    # noise-class
    p = subparsers.add_parser('noise-class', parents=[output, run, measure], help='유색 잡음 분류')
    p.add_argument('--samples', type=int)
    p.add_argument('--size', type=int)
    p.add_argument('--measures', nargs='+', choices=measure_choices)
    p.set_defaults(handler=cmd_experiment)

    # robustness
    p = subparsers.add_parser('robustness', parents=[output, run, measure], help='이미지 크기별 변동계수')
    p.add_argument('--sizes', type=int, nargs='+')
    p.add_argument('--samples', type=int)
    p.add_argument('--noise-types', nargs='+', choices=list(NOISE_BETAS))
    p.add_argument('--measures', nargs='+', choices=measure_choices)
    p.set_defaults(handler=cmd_experiment)

    # mix-robustness
    p = subparsers.add_parser('mix-robustness', parents=[output, run, measure], help='MIX + 잡음 변동계수')
    p.add_argument('--p-values', type=float, nargs='+')
    p.add_argument('--variances', type=float, nargs='+')
    p.add_argument('--samples', type=int)
    p.add_argument('--size', type=int)
    p.add_argument('--measures', nargs='+', choices=measure_choices)
    p.set_defaults(handler=cmd_experiment)

    # logistic
    p = subparsers.add_parser('logistic', parents=[output, run, measure], help='로지스틱 사상 스윕')
    p.add_argument('--a-range', type=float, nargs=2, metavar=('START', 'STOP'))
    p.add_argument('--step', type=float)
    p.add_argument('--length', type=int)
    p.add_argument('--embed-m', type=int)
    p.add_argument('--x0', type=float)
    p.add_argument('--burn-in', type=int)
    p.add_argument('--measures', nargs='+', choices=measure_choices)
    p.set_defaults(handler=cmd_experiment)

    # bench
    p = subparsers.add_parser('bench', parents=[output, run, measure], help='계산 시간 측정')
    p.add_argument('--sizes', type=int, nargs='+')
    p.add_argument('--repeats', type=int)
    p.add_argument('--measures', nargs='+', choices=measure_choices)
    p.set_defaults(handler=cmd_experiment)

    # classify
    p = subparsers.add_parser('classify', parents=[output, run, measure], help='데이터셋 분류 파이프라인')
    p.add_argument('dataset', help='클래스별 하위 디렉터리가 있는 데이터셋 경로')
    p.add_argument('--pipeline', choices=['image', 'signal'], default='image')
    p.add_argument('--measure', choices=measure_choices, default='graden')
    p.add_argument('--window-mode', choices=['sliding', 'prefix'], default='sliding')
    p.add_argument('--window', type=int)
    p.add_argument('--step', type=int)
    p.add_argument('--embed-m', type=int)
    p.add_argument('--image-size', type=int)
    p.set_defaults(handler=cmd_experiment)

    # rerun
    p = subparsers.add_parser('rerun', parents=[output], help='매니페스트로 실험 다시 실행')
    p.add_argument('manifest', help='<결과>.manifest.json 경로')
    p.set_defaults(handler=cmd_rerun)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    명령행 진입점

    Returns:
        int: 종료 코드 (0 성공, 1 데이터 오류). 사용법 오류는 argparse가 2로 종료합니다.
    """
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr
    )

    try:
        return args.handler(args)
    except GradEnError as e:
        print(f"오류: {_one_line(e)}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"오류: 파일을 처리할 수 없습니다 ({_one_line(e)})", file=sys.stderr)
        return 1
