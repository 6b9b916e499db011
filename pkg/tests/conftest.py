import os.path
import sys
import pytest


sys.path.append(os.path.join(os.path.dirname(__file__), "../src"))

from doily_model import DoilyModel  # noqa: E402
from models import mask_indices  # noqa: E402
from w2 import SYMPLECTIC, LabeledW2, build_w2_symplectic  # noqa: E402


@pytest.fixture(scope="session")
def doily():
    """Fully built model, shared by the whole run."""
    return DoilyModel()


@pytest.fixture(scope="session")
def w2(doily):
    return doily.w2


@pytest.fixture
def broken_w2():
    """W(2) with its first line removed."""
    w = build_w2_symplectic()
    return LabeledW2(w.labels, [mask_indices(line) for line in w.lines[1:]], SYMPLECTIC)
