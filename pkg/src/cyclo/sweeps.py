"""Exhaustive verification sweeps over bounded parameter ranges."""

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from cyclo import lehmer
from cyclo.mpoly import MultiPoly, parse
from cyclo.ntkernel import euler_phi, factorize
from cyclo.report import VerificationReport, merge

CLAIM_IDS = {
    "lehmer": "lehmer-identity",
    "conjecture": "conjecture-1",
    "routes": "route-agreement",
    "integrality": "integrality",
    "ak": "ak-congruence",
    "wmodp": "w-mod-p",
    "wexpansion": "w-expansion",
    "wfactor": "w-factorization",
    "cyclotomic": "cyclotomic-product",
}

# per-claim defaults used when a cap is left unset
_DEFAULT_N_MAX = {"ak": 500}
_DEFAULT_K_MAX = {"conjecture": 6, "ak": 6}


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 1
    n_max: Optional[int] = None
    k_max: Optional[int] = None
    m_max: int = 8
    parallelism: int = 1
    output_format: str = "text"
    timing: bool = True

    def __post_init__(self):
        if self.n_min < 1:
            raise ValueError("n_min must be at least 1")
        if self.n_max is not None and self.n_max < self.n_min:
            raise ValueError(f"n_min={self.n_min} exceeds n_max={self.n_max}")
        for name in ("k_max", "n_max"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be at least 1")
        if self.m_max < 1 or self.parallelism < 1:
            raise ValueError("m_max and parallelism must be at least 1")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    def resolved(self, claim: str) -> Tuple[int, int]:
        n_max = self.n_max if self.n_max is not None else _DEFAULT_N_MAX.get(claim, 200)
        k_max = self.k_max if self.k_max is not None else _DEFAULT_K_MAX.get(claim, 12)
        return n_max, k_max


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CYCLO_JOBS", "1")))
    except ValueError:
        return 1


# A task is (check function name, argument tuple); names keep tasks picklable.
Task = Tuple[str, tuple]

_CHECKS: Dict[str, Callable[..., VerificationReport]] = {
    "lehmer": lehmer.check_lehmer_identity,
    "conjecture": lehmer.check_conjecture_divisibility,
    "routes": lehmer.check_route_agreement,
    "omega_int": lehmer.check_integrality,
    "fkn_int": lehmer.check_fkn_integrality,
    "ak": lehmer.check_ak_congruence,
    "wmodp": lehmer.w_mod_p_check,
    "wexpansion": lehmer.w_expansion_check,
    "wfactor": lehmer.check_w_factorization,
    "cyclotomic": lehmer.check_cyclotomic_product,
}
_USES_TABLE = {"lehmer", "conjecture", "routes"}


def _tasks(claim: str, cfg: SweepConfig) -> Tuple[List[Task], str]:
    n_max, k_max = cfg.resolved(claim)
    lo2, lo3 = max(2, cfg.n_min), max(3, cfg.n_min)
    if claim == "lehmer":
        tasks = [("lehmer", (n, k)) for n in range(lo2, n_max + 1) for k in range(min(euler_phi(n), k_max) + 1)]
        return tasks, f"n={lo2}..{n_max}, k=0..min(phi(n),{k_max})"
    if claim in ("conjecture", "routes"):
        return [(claim, (k,)) for k in range(k_max + 1)], f"k=0..{k_max}"
    if claim == "integrality":
        tasks = []
        for n in range(lo3, n_max + 1):
            phi = euler_phi(n)
            tasks += [("omega_int", (n, m)) for m in range(1, cfg.m_max + 1) if 2 * m < phi]
            tasks += [("fkn_int", (n, k)) for k in range(1, min(k_max, phi - 1) + 1)]
        return tasks, f"n={lo3}..{n_max}, 1<=m<phi(n)/2, m<={cfg.m_max}; 1<=k<phi(n), k<={k_max}"
    if claim == "ak":
        tasks = [
            ("ak", (n, k))
            for n in range(lo3, n_max + 1)
            for k in range(1, k_max + 1)
            if 2 * k + 1 < euler_phi(n)
        ]
        return tasks, f"n={lo3}..{n_max}, k=1..{k_max}, 2k+1<phi(n)"
    if claim == "wmodp":
        tasks = []
        for q in range(lo3, n_max + 1):
            pairs = factorize(q)
            if len(pairs) == 1:
                tasks.append(("wmodp", pairs[0]))
        return tasks, f"prime powers p^r in {lo3}..{n_max}"
    if claim == "wexpansion":
        return [("wexpansion", (n, cfg.m_max)) for n in range(lo3, n_max + 1)], f"n={lo3}..{n_max}, m<={cfg.m_max}"
    if claim in ("wfactor", "cyclotomic"):
        return [(claim, (n,)) for n in range(cfg.n_min, n_max + 1)], f"n={cfg.n_min}..{n_max}"
    raise ValueError(f"unknown claim {claim!r}; expected one of {sorted(CLAIM_IDS)}")


def _run_chunk(chunk: List[Task], table) -> List[VerificationReport]:
    out = []
    for name, args in chunk:
        check = _CHECKS[name]
        out.append(check(*args, table=table) if name in _USES_TABLE else check(*args))
    return out


def _chunks(tasks: List[Task], count: int) -> List[List[Task]]:
    # round-robin so expensive large-n tasks are spread across workers
    return [tasks[i::count] for i in range(count)]


def run_sweep(claim: str, cfg: SweepConfig = SweepConfig(), table=None) -> VerificationReport:
    """Run every instance of ``claim`` in the configured range and merge the results.

    ``table`` optionally overrides F_k (mapping k -> MultiPoly) for the claims
    that consume it; this is how mutated fixtures are fed in.
    """
    start = time.perf_counter()
    tasks, range_text = _tasks(claim, cfg)
    if cfg.parallelism > 1 and len(tasks) > 1:
        count = min(cfg.parallelism * 4, len(tasks))
        chunks = _chunks(tasks, count)
        parts = [None] * len(tasks)
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            for i, results in enumerate(pool.map(_run_chunk, chunks, [table] * count)):
                parts[i::count] = results
    else:
        parts = _run_chunk(tasks, table)
    elapsed = int((time.perf_counter() - start) * 1000) if cfg.timing else 0
    return merge(CLAIM_IDS[claim], range_text, parts, elapsed)


SELFTEST_CLAIMS = ("routes", "conjecture", "lehmer", "integrality", "ak", "wfactor", "wmodp", "wexpansion", "cyclotomic")


def selftest(cfg: SweepConfig = SweepConfig()) -> List[VerificationReport]:
    return [run_sweep(claim, cfg) for claim in SELFTEST_CLAIMS]


# ---- fixtures ------------------------------------------------------------


def fixtures_dict(k_max: int = 12, m_max: int = 8) -> dict:
    tables = lehmer.golden_tables(k_max, m_max)
    return {
        "k_max": k_max,
        "m_max": m_max,
        **{name: {str(i): str(p) for i, p in polys.items()} for name, polys in tables.items()},
    }


def write_fixtures(path: str, k_max: int = 12, m_max: int = 8) -> None:
    with open(path, "w") as fh:
        json.dump(fixtures_dict(k_max, m_max), fh, indent=2)
        fh.write("\n")


def load_f_table(path: str) -> Dict[int, MultiPoly]:
    with open(path) as fh:
        data = json.load(fh)
    return {int(k): parse(text) for k, text in data["F"].items()}
