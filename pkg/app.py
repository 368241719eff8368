"""
GradEn 명령행 실행 파일

사용 예시:
    python app.py compute --measure graden image.pgm
    python app.py noise-class --samples 50 --out results/noise.csv
"""

import sys

from modules.cli import main


if __name__ == "__main__":
    sys.exit(main())
