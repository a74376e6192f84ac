"""Fixtures for the subject-corpus tests.

The primary toolkit is consumed strictly through its external interfaces:
the ``vpreclibm`` command line, the VPREC_LIBM_* environment variables with
LD_PRELOAD activation, and the documented profile/config text formats
(parsed locally here).
"""

import os
import subprocess
import sys

import pytest

SUBJECTS_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
INPUTS = os.path.join(SUBJECTS_DIR, "inputs")

CLI = [sys.executable, "-m", "vpreclibm"]


@pytest.fixture(scope="session")
def subjects_built():
    subprocess.run(["make", "-C", SUBJECTS_DIR], check=True, capture_output=True)
    return {
        name: os.path.join(SUBJECTS_DIR, name)
        for name in ("mathbench", "mathbench_mt", "orbit")
    }


@pytest.fixture(scope="session")
def interposer_so(tmp_path_factory):
    out_dir = str(tmp_path_factory.mktemp("so"))
    proc = subprocess.run(
        CLI + ["build", "--out-dir", out_dir], check=True, capture_output=True, text=True
    )
    return proc.stdout.strip()


def preload_env(so_path, mode, **vars):
    env = dict(os.environ)
    env.update({"LD_PRELOAD": so_path, "VPREC_LIBM_MODE": mode, "LC_ALL": "C"})
    for k, v in vars.items():
        env[f"VPREC_LIBM_{k.upper()}"] = str(v)
    return env


def parse_profile_lines(path):
    """Minimal reader for the documented profile schema."""
    with open(path) as f:
        header = f.readline().rstrip("\n")
        assert header == "#vprec-libm-profile v1"
        records = []
        for line in f:
            fields = dict(kv.split("=", 1) for kv in line.split())
            rec = {
                "func": fields["func"],
                "id": int(fields["id"], 16),
                "calls": int(fields["calls"]),
                "nan": int(fields["nan"]),
                "inf": int(fields["inf"]),
            }
            for key in ("in0", "in1", "out"):
                if key in fields:
                    lo, hi = fields[key].split(":")
                    rec[key] = (float.fromhex(lo), float.fromhex(hi))
            records.append(rec)
    return records


def parse_config_lines(path):
    """Minimal reader for the documented config schema."""
    with open(path) as f:
        header = f.readline().rstrip("\n")
        assert header == "#vprec-libm-config v1"
        default = None
        sites = []
        for line in f:
            kind, _, rest = line.rstrip("\n").partition(" ")
            fields = dict(kv.split("=", 1) for kv in rest.split())
            if kind == "default":
                default = {"p": int(fields["p"]), "r": int(fields["r"])}
            elif kind == "site":
                sites.append(
                    {
                        "id": int(fields["id"], 16),
                        "func": fields["func"],
                        "p": int(fields["p"]),
                        "r": int(fields["r"]),
                        "mode": fields["mode"],
                    }
                )
    assert default is not None
    return default, sites
