import os, pathlib
import pytest

os.chdir(pathlib.Path(__file__).parent / 'scoreline' / 'tests')

pytest.main()
