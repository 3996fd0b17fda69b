import pytest
from hypothesis import settings

from charhopf import _pykernels, kernels

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_KERNEL_NAMES = ("is_lyndon", "min_suffix_start", "lyndon_words", "poly_mul", "cyc_mul")


def kernel_backends():
    out = ["python"]
    try:
        from charhopf import _ckernels  # noqa: F401
        out.append("cython")
    except ImportError:
        pass
    return out


@pytest.fixture(params=kernel_backends())
def backend(request, monkeypatch):
    """Run a test once per kernel implementation."""
    if request.param == "python":
        for name in _KERNEL_NAMES:
            monkeypatch.setattr(kernels, name, getattr(_pykernels, name))
    else:
        from charhopf import _ckernels
        for name in _KERNEL_NAMES:
            monkeypatch.setattr(kernels, name, getattr(_ckernels, name))
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
