import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chemsumm import resources


@pytest.fixture(scope="session")
def config():
    return resources.default_config()


@pytest.fixture(scope="session")
def synthetic_corpus(tmp_path_factory):
    """(corpus_dir, planted) where planted maps doc id -> planted ordinals."""
    from synth import write_synthetic_corpus

    corpus_dir = tmp_path_factory.mktemp("corpus")
    planted = write_synthetic_corpus(
        corpus_dir, n_docs=20, n_sentences=60, n_planted=5, seed=7
    )
    return corpus_dir, planted
