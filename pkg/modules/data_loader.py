"""
데이터 로더 모듈

래스터 이미지(PGM/PPM/PNG)와 1차원 신호(텍스트/엑셀)를 읽고, 클래스별 하위
디렉터리로 구성된 데이터셋을 순회하며, 결과를 CSV/JSON으로 원자적으로 저장합니다.
"""

import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Tuple, Union

import numpy as np
import pandas as pd
from PIL import Image, UnidentifiedImageError

from modules.exceptions import (
    CorruptFileError,
    EmptyDatasetError,
    GradEnError,
    ImageNotFoundError,
    SignalParseError,
    UnsupportedFormatError
)
from modules.graden import as_gray_image
from modules.transforms import as_time_series, grayscale


logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

IMAGE_SUFFIXES = ('.pgm', '.ppm', '.pnm', '.png')
SIGNAL_SUFFIXES = ('.txt', '.csv', '.xlsx')
TABLE_FORMATS = ('csv', 'json')

# 16비트 흑백 이미지를 [0, 255]로 맞출 때의 최댓값
_MAX_16BIT = 65535.0


@dataclass
class LabeledSample:
    """클래스 이름이 붙은 표본 (이미지 또는 신호)"""
    label: str
    source: str
    data: np.ndarray

    @property
    def image(self) -> np.ndarray:
        return self.data


@dataclass
class LoadFailure:
    """데이터셋 순회 중 읽지 못한 파일"""
    source: str
    reason: str


def _existing_file(path: PathLike) -> Path:
    path = Path(path)
    if not path.is_file():
        raise ImageNotFoundError(f"파일을 찾을 수 없습니다: {path}")
    return path


def load_image(path: PathLike) -> np.ndarray:
    """
    래스터 이미지를 [0, 255] 범위의 실수 흑백 이미지로 읽습니다.

    RGB 이미지는 세 채널 평균으로 흑백 변환합니다.

    Args:
        path: .pgm / .ppm / .pnm / .png 파일 경로

    Returns:
        np.ndarray: (H, W) float64 배열

    Raises:
        ImageNotFoundError: 파일이 없을 때
        UnsupportedFormatError: 지원하지 않는 확장자일 때
        CorruptFileError: 파일이 손상되었거나 잘렸을 때
    """
    path = _existing_file(path)
    if path.suffix.lower() not in IMAGE_SUFFIXES:
        raise UnsupportedFormatError(
            f"지원하지 않는 이미지 형식입니다: {path} (가능: {', '.join(IMAGE_SUFFIXES)})"
        )

    try:
        with Image.open(path) as img:
            img.load()
            mode = img.mode
            if mode in ('RGB', 'L', 'F') or mode.startswith('I'):
                pixels = np.asarray(img, dtype=np.float64)
            elif mode == '1':
                pixels = np.asarray(img.convert('L'), dtype=np.float64)
            else:
                pixels = np.asarray(img.convert('RGB'), dtype=np.float64)
    except (UnidentifiedImageError, OSError, SyntaxError, ValueError) as e:
        raise CorruptFileError(f"이미지 파일을 읽을 수 없습니다: {path} ({e})") from e

    if mode.startswith('I'):
        pixels = pixels * (255.0 / _MAX_16BIT)
    if pixels.ndim == 3:
        pixels = grayscale(pixels)

    return as_gray_image(pixels)


def _parse_signal_text(path: Path) -> np.ndarray:
    try:
        text = path.read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise CorruptFileError(f"신호 파일을 텍스트로 읽을 수 없습니다: {path}") from e

    values = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        for token in line.split(','):
            token = token.strip()
            if not token:
                continue
            try:
                value = float(token)
            except ValueError:
                raise SignalParseError(
                    f"{path} {line_no}번째 줄: 숫자로 변환할 수 없는 값 '{token}'", line=line_no
                )
            if not np.isfinite(value):
                raise SignalParseError(f"{path} {line_no}번째 줄: 유한하지 않은 값 '{token}'", line=line_no)
            values.append(value)
    return np.array(values, dtype=np.float64)


def _parse_signal_excel(path: Path) -> np.ndarray:
    try:
        sheet = pd.read_excel(path, header=None, engine='openpyxl')
    except Exception as e:
        raise CorruptFileError(f"엑셀 파일을 읽을 수 없습니다: {path} ({e})") from e

    column = pd.to_numeric(sheet.iloc[:, 0], errors='coerce')
    bad_rows = column[column.isna() & sheet.iloc[:, 0].notna()]
    if not bad_rows.empty:
        line_no = int(bad_rows.index[0]) + 1
        raise SignalParseError(f"{path} {line_no}번째 행: 숫자로 변환할 수 없는 값", line=line_no)
    return column.dropna().to_numpy(dtype=np.float64)


def load_signal(path: PathLike) -> np.ndarray:
    """
    1차원 신호를 파일 순서대로 읽습니다.

    텍스트는 한 줄에 값 하나 또는 쉼표로 구분된 값, 엑셀(.xlsx)은 첫 번째 열을 읽습니다.

    Raises:
        ImageNotFoundError: 파일이 없을 때
        UnsupportedFormatError: 지원하지 않는 확장자일 때
        SignalParseError: 숫자가 아닌 값이 있을 때 (줄 번호 포함)

    Examples:
        >>> load_signal('signal.txt')   # 파일 내용 "1\\n2\\n3\\n"
        array([1., 2., 3.])
    """
    path = _existing_file(path)
    suffix = path.suffix.lower()
    if suffix not in SIGNAL_SUFFIXES:
        raise UnsupportedFormatError(
            f"지원하지 않는 신호 형식입니다: {path} (가능: {', '.join(SIGNAL_SUFFIXES)})"
        )

    values = _parse_signal_excel(path) if suffix == '.xlsx' else _parse_signal_text(path)
    if values.size == 0:
        raise CorruptFileError(f"신호 파일에 값이 없습니다: {path}")
    return as_time_series(values)


def _walk_dataset(
    root: PathLike,
    suffixes: Tuple[str, ...],
    loader: Callable[[Path], np.ndarray]
) -> Tuple[List[LabeledSample], List[LoadFailure]]:
    root = Path(root)
    if not root.is_dir():
        raise ImageNotFoundError(f"데이터셋 디렉터리를 찾을 수 없습니다: {root}")

    samples = []
    failures = []
    for class_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        for file_path in sorted(p for p in class_dir.iterdir() if p.is_file()):
            if file_path.suffix.lower() not in suffixes:
                logger.debug("지원하지 않는 파일 건너뜀: %s", file_path)
                continue
            try:
                data = loader(file_path)
            except GradEnError as e:
                logger.warning("⚠️ 파일을 읽지 못해 제외합니다: %s (%s)", file_path, e)
                failures.append(LoadFailure(source=str(file_path), reason=str(e)))
                continue
            samples.append(LabeledSample(label=class_dir.name, source=str(file_path), data=data))

    if not samples:
        raise EmptyDatasetError(f"데이터셋에서 읽을 수 있는 표본이 없습니다: {root}")

    logger.info("데이터셋 로드: %s (표본 %d개, 실패 %d개)", root, len(samples), len(failures))
    return samples, failures


def load_dataset(root: PathLike) -> Tuple[List[LabeledSample], List[LoadFailure]]:
    """
    클래스별 하위 디렉터리 구조의 이미지 데이터셋을 읽습니다.

    디렉터리와 파일은 이름순으로 순회하며, 하위 디렉터리 이름이 클래스 이름입니다.
    읽지 못한 파일은 경고 후 실패 목록에 담고 계속 진행합니다.

    Args:
        root: 데이터셋 루트 디렉터리

    Returns:
        Tuple[List[LabeledSample], List[LoadFailure]]: (표본 목록, 실패 목록)

    Raises:
        EmptyDatasetError: 읽을 수 있는 표본이 하나도 없을 때
    """
    return _walk_dataset(root, IMAGE_SUFFIXES, load_image)


def load_signal_dataset(root: PathLike) -> Tuple[List[LabeledSample], List[LoadFailure]]:
    """클래스별 하위 디렉터리 구조의 신호 데이터셋을 읽습니다 (load_dataset과 같은 규칙)."""
    return _walk_dataset(root, SIGNAL_SUFFIXES, load_signal)


def _atomic_write(path: PathLike, content: str) -> Path:
    """같은 디렉터리의 임시 파일에 쓴 뒤 이름을 바꿔 원자적으로 저장합니다."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f'.{path.name}.', suffix='.tmp', dir=path.parent)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            f.write(content)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.remove(tmp_name)
        raise
    return path


def table_to_text(df: pd.DataFrame, fmt: str = 'csv') -> str:
    """결과 표를 CSV(헤더 포함) 또는 JSON(레코드 목록) 문자열로 변환합니다."""
    if fmt not in TABLE_FORMATS:
        raise UnsupportedFormatError(f"지원하지 않는 출력 형식입니다: {fmt} (가능: csv, json)")
    if fmt == 'csv':
        return df.to_csv(index=False, lineterminator='\n')
    records = json.loads(df.to_json(orient='records', double_precision=15))
    return json.dumps(records, ensure_ascii=False, indent=2) + '\n'


def save_table(df: pd.DataFrame, path: PathLike, fmt: str = 'csv') -> Path:
    """결과 표를 파일로 원자적으로 저장합니다."""
    return _atomic_write(path, table_to_text(df, fmt))


def save_json(obj, path: PathLike) -> Path:
    """딕셔너리를 JSON 파일로 원자적으로 저장합니다."""
    return _atomic_write(path, json.dumps(obj, ensure_ascii=False, indent=2) + '\n')


def save_signal(path: PathLike, series, fmt: str = 'csv') -> Path:
    """
    1차원 신호를 원자적으로 저장합니다.

    csv는 헤더 없이 한 줄에 값 하나(load_signal이 읽는 형식), json은 값 목록입니다.
    """
    if fmt not in TABLE_FORMATS:
        raise UnsupportedFormatError(f"지원하지 않는 출력 형식입니다: {fmt} (가능: csv, json)")
    values = [float(v) for v in as_time_series(series)]
    if fmt == 'csv':
        return _atomic_write(path, ''.join(f"{v!r}\n" for v in values))
    return _atomic_write(path, json.dumps(values) + '\n')


def save_image(path: PathLike, image: np.ndarray) -> Path:
    """
    이미지를 최솟값~최댓값 기준으로 0~255에 맞춰 8비트 PGM으로 저장합니다.

    상수 이미지는 0으로 저장됩니다.
    """
    x = as_gray_image(image)
    low, high = x.min(), x.max()
    scaled = np.zeros_like(x) if high == low else (x - low) / (high - low) * 255.0
    pixels = np.round(scaled).astype(np.uint8)

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f'.{path.name}.', suffix='.tmp', dir=path.parent)
    os.close(fd)
    try:
        Image.fromarray(pixels).save(tmp_name, format='PPM')
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.remove(tmp_name)
        raise
    return path


def load_json(path: PathLike):
    """
    JSON 파일을 읽습니다.

    Raises:
        ImageNotFoundError: 파일이 없을 때
        CorruptFileError: JSON 형식이 아닐 때
    """
    path = _existing_file(path)
    try:
        return json.loads(path.read_text(encoding='utf-8'))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise CorruptFileError(f"JSON 파일을 읽을 수 없습니다: {path} ({e})") from e
