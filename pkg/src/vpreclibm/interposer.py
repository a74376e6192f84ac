"""Build and drive the preloadable interposer shared object.

The C source ships with the package; :func:`build_interposer` compiles it
with the system compiler.  :class:`InterposerHandle` loads a private copy of
the object in-process through ctypes for direct testing of the exported
entry points (each load gets a fresh file so the dynamic loader does not
dedupe handles and mode/config stay per-instance).
"""

from __future__ import annotations

import ctypes
import importlib.resources
import os
import shutil
import subprocess
import tempfile

from .extmath import FUNCTIONS

__all__ = ["build_interposer", "InterposerHandle", "SO_NAME", "preload_env"]

SO_NAME = "libvprec_libm.so"

_CFLAGS = ["-O2", "-shared", "-fPIC", "-fno-builtin", "-Wall"]
_LIBS = ["-lquadmath", "-lpthread", "-ldl"]


def _source_path() -> str:
    return str(importlib.resources.files("vpreclibm").joinpath("c/vprec_libm.c"))


def _compiler() -> list[str]:
    env_cc = os.environ.get("CC")
    if env_cc:
        return env_cc.split()
    for cand in ("gcc", "cc"):
        if shutil.which(cand):
            return [cand]
    raise RuntimeError("no C compiler found (set CC or install gcc)")


def build_interposer(out_dir: str | None = None, force: bool = False) -> str:
    """Compile the interposer if needed; returns the shared object path."""
    src = _source_path()
    if out_dir is None:
        out_dir = os.path.join(tempfile.gettempdir(), f"vpreclibm-build-{os.getuid()}")
    os.makedirs(out_dir, exist_ok=True)
    out = os.path.join(out_dir, SO_NAME)
    if not force and os.path.exists(out) and os.path.getmtime(out) >= os.path.getmtime(src):
        return out
    cmd = _compiler() + _CFLAGS + ["-o", out, src] + _LIBS
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != 0:
        raise RuntimeError(f"interposer build failed: {' '.join(cmd)}\n{proc.stderr}")
    return out


def preload_env(
    so_path: str,
    mode: str,
    profile_file: str | None = None,
    config_file: str | None = None,
    newsites_file: str | None = None,
    stack_frames: int | None = None,
) -> dict[str, str]:
    """Environment variables that activate the interposer in a subprocess."""
    env = {"LD_PRELOAD": so_path, "VPREC_LIBM_MODE": mode, "LC_ALL": "C"}
    if profile_file:
        env["VPREC_LIBM_PROFILE_FILE"] = profile_file
    if config_file:
        env["VPREC_LIBM_CONFIG_FILE"] = config_file
    if newsites_file:
        env["VPREC_LIBM_NEWSITES_FILE"] = newsites_file
    if stack_frames is not None:
        env["VPREC_LIBM_STACK_FRAMES"] = str(stack_frames)
    return env


class InterposerHandle:
    """A private in-process instance of the interposer, loaded via dlopen.

    Mode and paths are fixed at load time (the library reads its environment
    in its constructor), so they are passed here and scoped to the dlopen
    call.  Use as a context manager to unload and clean up.
    """

    def __init__(
        self,
        so_path: str,
        mode: str = "passthrough",
        profile_file: str | None = None,
        config_file: str | None = None,
        newsites_file: str | None = None,
        stack_frames: int | None = None,
    ):
        self._tmpdir = tempfile.mkdtemp(prefix="vpreclibm-dl-")
        self._so_copy = os.path.join(self._tmpdir, SO_NAME)
        shutil.copy2(so_path, self._so_copy)

        wanted = preload_env(
            self._so_copy, mode, profile_file, config_file, newsites_file, stack_frames
        )
        del wanted["LD_PRELOAD"]
        saved = {k: os.environ.get(k) for k in list(wanted) + [
            "VPREC_LIBM_PROFILE_FILE", "VPREC_LIBM_CONFIG_FILE",
            "VPREC_LIBM_NEWSITES_FILE", "VPREC_LIBM_STACK_FRAMES",
        ]}
        for k in saved:
            os.environ.pop(k, None)
        os.environ.update(wanted)
        try:
            self._lib = ctypes.CDLL(self._so_copy)
        finally:
            for k, v in saved.items():
                if v is None:
                    os.environ.pop(k, None)
                else:
                    os.environ[k] = v
        self._declare()

    def _declare(self) -> None:
        lib = self._lib
        for name, f in FUNCTIONS.items():
            if name == "sincos":
                continue
            cf = getattr(lib, name)
            cf.restype = ctypes.c_double
            cf.argtypes = [ctypes.c_double] * f.arity
        lib.sincos.restype = None
        lib.sincos.argtypes = [
            ctypes.c_double,
            ctypes.POINTER(ctypes.c_double),
            ctypes.POINTER(ctypes.c_double),
        ]
        lib.vprec_libm_flush.restype = None
        lib.vprec_libm_flush.argtypes = []

    def call(self, name: str, *args: float):
        if name == "sincos":
            s = ctypes.c_double()
            c = ctypes.c_double()
            self._lib.sincos(args[0], ctypes.byref(s), ctypes.byref(c))
            return s.value, c.value
        return getattr(self._lib, name)(*args)

    def flush_profile(self) -> None:
        self._lib.vprec_libm_flush()

    def close(self) -> None:
        if self._lib is not None:
            handle = self._lib._handle
            self._lib = None
            ctypes.CDLL(None).dlclose(ctypes.c_void_p(handle))
        shutil.rmtree(self._tmpdir, ignore_errors=True)

    def __enter__(self) -> "InterposerHandle":
        return self

    def __exit__(self, *exc) -> None:
        self.close()
