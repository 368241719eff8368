"""
GradEn 모듈 패키지

이미지 불규칙성 측정(GradEn)과 비교 측정법, 모의 데이터 생성, 변환, 통계,
입출력, 실험, 명령행 기능을 모듈화하여 제공합니다.

Modules:
    - graden: 기울기 엔트로피(GradEn) 계산
    - baselines: SampEn2D / DistrEn2D / PerEn2D
    - generators: 유색 잡음, MIX_2D, 로지스틱 사상
    - transforms: 거리행렬, 윈도우, 흑백 변환, 축소
    - statistics: 변동계수, Hedges' g, 요약 통계
    - data_loader: 이미지/신호/데이터셋 로딩 및 결과 저장
    - experiments: 실험 실행과 매니페스트
    - config: 설정 관리
    - exceptions: 예외 계층
    - cli: 명령행 인터페이스
"""

__version__ = "1.0.0"
