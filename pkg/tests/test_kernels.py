import os
import random
import subprocess
import sys

import pytest

from bicliques import _fallback, _kernels
from bicliques.mis import mis_masks
from conftest import random_graph


def test_env_forces_fallback():
    env = dict(os.environ, BICLIQUES_PURE="1")
    proc = subprocess.run(
        [sys.executable, "-c", "import bicliques; print(bicliques.backend())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert proc.stdout.strip() == "pure"


def test_use_switches_and_rejects_unknown():
    before = _kernels.backend()
    _kernels.use("pure")
    assert _kernels.backend() == "pure" and _kernels.impl is _fallback
    _kernels.use(before)
    with pytest.raises(ValueError):
        _kernels.use("gpu")


def test_mis_kernels_identical_sequences():
    if not _kernels.COMPILED:
        pytest.skip("compiled extension not built")
    rng = random.Random(13)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 30), rng.choice([0.1, 0.3, 0.6]))
        local = list(g.masks)
        assert list(_kernels.impl.mis_small(local)) == list(_fallback.mis_small(local))


def test_mis_routes_agree(kernel):
    rng = random.Random(19)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 20), 0.3)
        restrict = sum(1 << v for v in range(g.n) if rng.random() < 0.7)
        assert list(mis_masks(g.masks, restrict)) == list(_fallback.iter_mis(g.masks, restrict))
