import pytest

from rkmatch import plan_launch, search_parallel, search_sequential


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # Compile (or load the cached) scan kernel once so timings and
    # per-test durations are not polluted by JIT work.
    search_sequential(b"warmup text", b"tex")
    search_parallel(b"warmup text", b"tex", plan_launch(11, 3, 32), workers=2)
