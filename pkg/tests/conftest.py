import importlib.resources as res

import pytest

from dischargelab import fragments, prover, words


@pytest.fixture(scope="session")
def full_words():
    """The complete canonical word sets, generated once per test run."""
    return {k: list(words.enumerate_words(k)) for k in ("V3", "F3", "F5")}


@pytest.fixture(scope="session")
def endgame_session(tmp_path_factory, full_words):
    """A session with generated words and the full shipped library."""
    s = prover.Session(str(tmp_path_factory.mktemp("session")))
    s._words_cache = dict(full_words)
    import hashlib
    import os
    os.makedirs(s.path, exist_ok=True)
    for kind, ws in full_words.items():
        text = "\n".join(w.text for w in ws) + "\n"
        with open(s._p(f"words_{kind}.txt"), "w") as f:
            f.write(text)
        s.manifest["words"][kind] = {
            "count": len(ws),
            "sha256": hashlib.sha256(text.encode()).hexdigest(),
        }
    s.save()
    prover.load_paper_library(s)
    return s


def load_fragment(name):
    ref = res.files("dischargelab").joinpath(f"fixtures/{name}.frag")
    return fragments.fragment_from_text(ref.read_text(), name=name)
