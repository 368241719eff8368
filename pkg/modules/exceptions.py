"""
예외 정의 모듈

엔트로피 계산, 데이터 로딩, 실험 실행 중 발생하는 오류를 구분하여 제공합니다.
모든 예외는 GradEnError를 상속하며, 호출자가 내장 예외로도 잡을 수 있도록
가장 가까운 내장 예외를 함께 상속합니다.
"""


class GradEnError(Exception):
    """툴킷 전체 예외의 기반 클래스"""


class ImageTooSmallError(GradEnError, ValueError):
    """이미지 크기가 계산에 필요한 최소 크기보다 작을 때"""


class NonFiniteInputError(GradEnError, ValueError):
    """입력에 NaN 또는 Inf가 포함되어 있을 때"""


class ParameterRangeError(GradEnError, ValueError):
    """파라미터가 허용 범위를 벗어났을 때"""


class UndefinedEntropyError(GradEnError, ArithmeticError):
    """일치 쌍이 없어 엔트로피가 정의되지 않을 때 (SampEn2D)"""


class InsufficientDataError(GradEnError, ValueError):
    """통계 계산에 필요한 표본 수가 부족할 때"""


class ZeroMeanError(GradEnError, ZeroDivisionError):
    """평균이 0이어서 변동계수를 정의할 수 없을 때"""


class DegenerateVarianceError(GradEnError, ZeroDivisionError):
    """합동 분산이 0이어서 효과크기를 정의할 수 없을 때"""


class ImageNotFoundError(GradEnError, FileNotFoundError):
    """입력 파일 또는 디렉터리가 존재하지 않을 때"""


class UnsupportedFormatError(GradEnError, ValueError):
    """지원하지 않는 파일 형식일 때"""


class CorruptFileError(GradEnError, ValueError):
    """파일이 손상되었거나 잘려서 읽을 수 없을 때"""


class SignalParseError(GradEnError, ValueError):
    """신호 텍스트 파일을 숫자로 변환할 수 없을 때

    Attributes:
        line (int): 오류가 발생한 줄 번호 (1부터 시작)
    """

    def __init__(self, message: str, line: int):
        super().__init__(message)
        self.line = line


class EmptyDatasetError(GradEnError, ValueError):
    """데이터셋 디렉터리에서 읽을 수 있는 표본이 하나도 없을 때"""


class ManifestError(GradEnError, ValueError):
    """실행 매니페스트가 재현에 필요한 필드를 갖추지 못했을 때"""


class ConfigError(GradEnError, ValueError):
    """환경 변수 등 설정 값이 올바르지 않을 때"""
