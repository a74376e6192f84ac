"""Per-call-site search for the minimal output precision passing a check.

The optimization loop: profile the subject once, generate the full-precision
initial config, capture reference output under it, then visit call-sites in
descending call-count order and binary-search the smallest pseudo-mantissa
width p in [0, 52] whose output still satisfies the correctness check.  Each
trial is one full subject run under a candidate config; previously decided
sites stay at their minima, undecided sites at 52.  Sites that fail even at
p = 52 are marked passthrough.  Exponent widths come from the profiled
output ranges plus a safety margin, or from an optional second search.

The reference output is taken from the execute-mode all-52 run rather than
the native run: the extended-precision evaluation differs from the native
library by up to one ulp per call, and charging that irreducible discrepancy
against every candidate would skew the search.
"""

from __future__ import annotations

import math
import os
import shlex
import subprocess
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .formats import FloatFormat
from .interposer import build_interposer, preload_env
from .profiles import (
    CallSiteRecord,
    ConfigEntry,
    PrecisionConfig,
    derive_range_bits,
    initial_config,
    parse_profile,
    write_config,
)

__all__ = [
    "CorrectnessCheck",
    "TrialLogEntry",
    "SiteResult",
    "ExplorationResult",
    "ExplorerError",
    "compare_numeric",
    "minimal_passing_precision",
    "explore",
]

P_MAX = 52
R_MAX = 11
MAX_TRIALS_PER_SITE = 7  # ceil(log2(53)) + the initial sanity check


class ExplorerError(RuntimeError):
    pass


@dataclass(frozen=True)
class CorrectnessCheck:
    """Numeric tolerance check or external checker command.

    ``numeric``: candidate and reference outputs must tokenize into the same
    count of numeric tokens, every pair within max(tol_abs, tol_rel*|ref|);
    NaN matches only NaN, infinities must match by sign.  ``external``: the
    checker command is run with the candidate and reference output paths
    appended; exit status 0 accepts.
    """

    kind: str = "numeric"  # or "external"
    tol_rel: float = 0.0
    tol_abs: float = 0.0
    checker_cmd: str | None = None

    def __post_init__(self):
        if self.kind not in ("numeric", "external"):
            raise ValueError(f"bad check kind {self.kind!r}")
        if self.tol_rel < 0 or self.tol_abs < 0:
            raise ValueError("tolerances must be non-negative")
        if (self.kind == "external") != (self.checker_cmd is not None):
            raise ValueError("external checks need checker_cmd, numeric ones must not have it")


def _numeric_tokens(text: str) -> list[float]:
    out = []
    for tok in text.split():
        try:
            out.append(float(tok))
            continue
        except ValueError:
            pass
        try:
            out.append(float.fromhex(tok))
        except ValueError:
            continue
    return out


def compare_numeric(candidate: str, reference: str, tol_rel: float, tol_abs: float) -> tuple[bool, str]:
    """Token-stream comparison; returns (accepted, reason)."""
    cand = _numeric_tokens(candidate)
    ref = _numeric_tokens(reference)
    if len(cand) != len(ref):
        return False, f"token count mismatch: candidate {len(cand)} vs reference {len(ref)}"
    for i, (c, r) in enumerate(zip(cand, ref)):
        if math.isnan(r) or math.isnan(c):
            if math.isnan(r) and math.isnan(c):
                continue
            return False, f"token {i}: NaN mismatch ({c} vs {r})"
        if math.isinf(r) or math.isinf(c):
            if c == r:
                continue
            return False, f"token {i}: infinity mismatch ({c} vs {r})"
        if abs(c - r) <= max(tol_abs, tol_rel * abs(r)):
            continue
        return False, f"token {i}: |{c} - {r}| exceeds tolerance"
    return True, "ok"


def minimal_passing_precision(
    check: Callable[[int], bool], lo: int = 0, hi: int = P_MAX
) -> tuple[int | None, int]:
    """Smallest v in [lo, hi] with check(v) true, assuming monotonicity.

    Returns (value, trials).  The first trial is a sanity check at hi; if it
    fails the result is (None, trials).  Maintains "hi passes"; mid floor;
    pass -> hi = mid, fail -> lo = mid + 1.
    """
    trials = 1
    if not check(hi):
        return None, trials
    while lo < hi:
        mid = (lo + hi) // 2
        trials += 1
        if check(mid):
            hi = mid
        else:
            lo = mid + 1
    return hi, trials


@dataclass
class TrialLogEntry:
    site_id: int
    p: int
    verdict: str  # pass | fail
    wall_ms: int
    kind: str = "search"  # search | range | certificate | validate

    def line(self) -> str:
        extra = "" if self.kind == "search" else f" kind={self.kind}"
        return f"site=0x{self.site_id:x} p={self.p} verdict={self.verdict} wall_ms={self.wall_ms}{extra}"


@dataclass
class SiteResult:
    record: CallSiteRecord
    p: int
    r: int
    mode: str  # vprec | passthrough
    trials: int
    certificate_ok: bool | None = None  # None when certificates are disabled


@dataclass
class ExplorationResult:
    config: PrecisionConfig
    records: list[CallSiteRecord]
    sites: list[SiteResult]
    trial_log: list[TrialLogEntry] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    validation_passed: bool = True

    @property
    def total_optimized_bits(self) -> int:
        return sum(s.p for s in self.sites)


class _SubjectRunner:
    """Runs the subject under the interposer, sequentially, one mode per call."""

    def __init__(self, subject_cmd: str, workdir: str, so_path: str):
        self.subject_cmd = subject_cmd
        self.workdir = workdir
        self.so_path = so_path

    def run(
        self,
        mode: str,
        config_file: str | None = None,
        profile_file: str | None = None,
        extra_env: dict[str, str] | None = None,
    ):
        env = dict(os.environ)
        env.update(
            preload_env(self.so_path, mode, profile_file=profile_file, config_file=config_file)
        )
        if extra_env:
            env.update(extra_env)
        t0 = time.monotonic()
        proc = subprocess.run(
            self.subject_cmd,
            shell=True,
            env=env,
            cwd=self.workdir,
            capture_output=True,
        )
        wall_ms = int((time.monotonic() - t0) * 1000)
        return proc, wall_ms


def _build_candidate(
    order: Sequence[CallSiteRecord],
    decided: dict[int, tuple[int, int, str]],
    trial_site: int | None,
    trial_p: int,
    trial_r: int,
    default: FloatFormat,
) -> PrecisionConfig:
    entries = []
    for rec in order:
        if rec.site_id == trial_site:
            entries.append(ConfigEntry(rec.site_id, rec.func, FloatFormat(trial_r, trial_p), "vprec"))
        elif rec.site_id in decided:
            p, r, mode = decided[rec.site_id]
            entries.append(ConfigEntry(rec.site_id, rec.func, FloatFormat(r, p), mode))
        else:
            entries.append(ConfigEntry(rec.site_id, rec.func, FloatFormat(R_MAX, P_MAX), "vprec"))
    return PrecisionConfig(default_format=default, entries=entries)


def explore(
    subject_cmd: str,
    check: CorrectnessCheck,
    workdir: str,
    interposer_so: str | None = None,
    range_margin: int = 1,
    explore_range: bool = False,
    certificates: bool = True,
    max_sites: int | None = None,
    profile_path: str | None = None,
    log: Callable[[str], None] = lambda s: None,
) -> ExplorationResult:
    """Run the full optimization loop over one subject command.

    Raises :class:`ExplorerError` for setup failures (missing interposer,
    reference run failing).  A failing final validation is reported in the
    result, not raised.
    """
    workdir = os.path.abspath(workdir)
    os.makedirs(workdir, exist_ok=True)
    so_path = os.path.abspath(interposer_so) if interposer_so else build_interposer()
    if not os.path.exists(so_path):
        raise ExplorerError(f"interposer shared object not found: {so_path}")
    runner = _SubjectRunner(subject_cmd, workdir, so_path)

    # subject runs use workdir as cwd; keep every shared path absolute
    prof_file = os.path.abspath(profile_path) if profile_path else os.path.join(workdir, "subject.profile")
    proc, _ = runner.run("profile", profile_file=prof_file)
    if proc.returncode != 0:
        raise ExplorerError(
            f"subject failed in profiling run (exit {proc.returncode}):\n{proc.stderr.decode(errors='replace')}"
        )
    with open(prof_file) as f:
        records = parse_profile(f)
    records.sort(key=lambda r: (-r.calls, r.site_id))
    base_config = initial_config(records)
    log(f"profiled {len(records)} call-sites from {sum(r.calls for r in records)} calls")

    cfg_file = os.path.join(workdir, "trial-config.txt")
    newsites_file = os.path.join(workdir, "new-sites.txt")

    def run_with(config: PrecisionConfig) -> tuple[subprocess.CompletedProcess, int]:
        with open(cfg_file, "w") as f:
            write_config(config, f)
        env_extra = {"VPREC_LIBM_NEWSITES_FILE": newsites_file}
        return runner.run("execute", config_file=cfg_file, extra_env=env_extra)

    # reference run under the initial all-52 config
    proc, _ = run_with(base_config)
    if proc.returncode != 0:
        raise ExplorerError(
            f"subject failed in reference run (exit {proc.returncode}):\n{proc.stderr.decode(errors='replace')}"
        )
    reference_out = proc.stdout
    ref_path = os.path.join(workdir, "reference.out")
    with open(ref_path, "wb") as f:
        f.write(reference_out)
    cand_path = os.path.join(workdir, "candidate.out")

    def accept(stdout: bytes) -> bool:
        if check.kind == "numeric":
            ok, _ = compare_numeric(
                stdout.decode(errors="replace"),
                reference_out.decode(errors="replace"),
                check.tol_rel,
                check.tol_abs,
            )
            return ok
        with open(cand_path, "wb") as f:
            f.write(stdout)
        checker = subprocess.run(
            shlex.split(check.checker_cmd) + [cand_path, ref_path],
            capture_output=True,
            cwd=workdir,
        )
        return checker.returncode == 0

    result = ExplorationResult(config=base_config, records=records, sites=[])
    decided: dict[int, tuple[int, int, str]] = {}
    explored = records if max_sites is None else records[:max_sites]

    def trial(site: CallSiteRecord, p: int, r: int, kind: str = "search") -> bool:
        cfg = _build_candidate(records, decided, site.site_id, p, r, base_config.default_format)
        proc, wall_ms = run_with(cfg)
        ok = proc.returncode == 0 and accept(proc.stdout)
        result.trial_log.append(
            TrialLogEntry(site.site_id, p, "pass" if ok else "fail", wall_ms, kind)
        )
        return ok

    # per-site dichotomic search, frequency order
    for rec in explored:
        trials_used = 0

        def check_p(p: int) -> bool:
            nonlocal trials_used
            trials_used += 1
            return trial(rec, p, R_MAX)

        p_star, _ = minimal_passing_precision(check_p)
        if p_star is None:
            decided[rec.site_id] = (P_MAX, R_MAX, "passthrough")
            msg = f"site 0x{rec.site_id:x} ({rec.func}) fails even at p=52; marked passthrough"
            result.warnings.append(msg)
            log("warning: " + msg)
            result.sites.append(SiteResult(rec, P_MAX, R_MAX, "passthrough", trials_used))
        else:
            decided[rec.site_id] = (p_star, R_MAX, "vprec")
            result.sites.append(SiteResult(rec, p_star, R_MAX, "vprec", trials_used))
            log(f"site 0x{rec.site_id:x} ({rec.func}, {rec.calls} calls): p = {p_star} [{trials_used} trials]")

    # exponent widths: profiled range + margin, or a second dichotomic search
    for site in result.sites:
        if site.mode == "passthrough":
            continue
        rec = site.record
        if explore_range:
            def check_r(r: int) -> bool:
                return trial(rec, site.p, r, kind="range")

            r_star, _ = minimal_passing_precision(check_r, lo=1, hi=R_MAX)
            site.r = r_star if r_star is not None else R_MAX
        else:
            site.r = min(derive_range_bits(rec) + range_margin, R_MAX)
        decided[rec.site_id] = (site.p, site.r, "vprec")

    # minimality certificates: p*-1 must fail and p* must pass, others fixed
    if certificates:
        for site in result.sites:
            if site.mode == "passthrough" or site.p == 0:
                continue
            rec = site.record
            below = trial(rec, site.p - 1, site.r, kind="certificate")
            at = trial(rec, site.p, site.r, kind="certificate")
            site.certificate_ok = (not below) and at
            if not site.certificate_ok:
                msg = (
                    f"non-monotone check at site 0x{rec.site_id:x} ({rec.func}): "
                    f"p={site.p - 1} {'passes' if below else 'fails'}, "
                    f"p={site.p} {'passes' if at else 'fails'}"
                )
                result.warnings.append(msg)
                log("warning: " + msg)

    # final whole-config validation
    final_config = _build_candidate(records, decided, None, 0, 0, base_config.default_format)
    proc, wall_ms = run_with(final_config)
    ok = proc.returncode == 0 and accept(proc.stdout)
    result.trial_log.append(TrialLogEntry(0, 0, "pass" if ok else "fail", wall_ms, "validate"))
    result.validation_passed = ok
    result.config = final_config
    if not ok:
        result.warnings.append("final validation run failed under the optimized config")

    # sites that surfaced only at execute time ran at the default format
    # throughout; surface them for a follow-up profiling round
    if os.path.exists(newsites_file):
        extra = {line.strip() for line in open(newsites_file) if line.strip()}
        for line in sorted(extra):
            msg = f"call-site absent from the profile ran at the default format: {line}"
            result.warnings.append(msg)
            log("warning: " + msg)
    return result
