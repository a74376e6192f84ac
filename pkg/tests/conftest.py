import os
import shutil
import subprocess
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from vpreclibm.interposer import build_interposer  # noqa: E402

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def _cc() -> str:
    for cand in (os.environ.get("CC"), "gcc", "cc"):
        if cand and shutil.which(cand):
            return cand
    raise RuntimeError("tests need a C compiler (gcc or cc)")


@pytest.fixture(scope="session")
def interposer_so(tmp_path_factory) -> str:
    out_dir = str(tmp_path_factory.mktemp("interposer"))
    return build_interposer(out_dir=out_dir, force=True)


def compile_subject(src_name: str, out_dir: str, extra_flags=()) -> str:
    src = os.path.join(DATA_DIR, src_name)
    out = os.path.join(out_dir, os.path.splitext(src_name)[0])
    cmd = [_cc(), "-O2", "-fno-builtin", "-o", out, src, "-lm"] + list(extra_flags)
    subprocess.run(cmd, check=True, capture_output=True)
    return out


@pytest.fixture(scope="session")
def twocalls_bin(tmp_path_factory) -> str:
    return compile_subject("twocalls.c", str(tmp_path_factory.mktemp("subjects")))


@pytest.fixture(scope="session")
def kernel_bin(tmp_path_factory) -> str:
    return compile_subject("kernel.c", str(tmp_path_factory.mktemp("subjects")))


@pytest.fixture(scope="session")
def wrapper_bin(tmp_path_factory) -> str:
    return compile_subject("wrapper.c", str(tmp_path_factory.mktemp("subjects")))
