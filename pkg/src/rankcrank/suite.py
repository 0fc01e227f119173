"""Named verification tasks and a deterministic (optionally parallel) runner."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import identities as ids
from .cache import get_table
from .partitions import CRANK_S2, RANK_S1

IDENTITIES = (
    "bailey", "bivariate", "classical", "cor5.2", "cor5.3", "cor5.4", "eq3.2", "eq3.5",
    "fg", "odd", "prop5.1", "thm1.1", "thm2.2", "thm2.6", "thm2.8",
)


@dataclass(frozen=True)
class Task:
    identity: str
    params: tuple  # sorted (key, value) pairs; hashable and picklable

    def kwargs(self) -> dict:
        return dict(self.params)


def _task(identity: str, **params) -> Task:
    return Task(identity, tuple(sorted(params.items())))


def plan(identity: str, Ns, ks, nus, Q: int, pairs=("crank", "rank"), rhos=()) -> list[Task]:
    """Expand one identity id (or ``all``) over the parameter grid."""
    if identity == "all":
        out = []
        for name in IDENTITIES:
            out.extend(plan(name, Ns, ks, nus, Q, pairs, rhos))
        return out
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    if identity in ("thm1.1", "bivariate", "eq3.2", "eq3.5"):
        return [_task(identity, N=N, Q=Q) for N in Ns]
    if identity in ("thm2.2", "thm2.6", "classical"):
        return [_task(identity, N=N, nu=nu, Q=Q) for N in Ns for nu in nus]
    if identity in ("thm2.8", "cor5.2", "cor5.3", "cor5.4", "fg"):
        return [_task(identity, N=N, k=k, Q=Q) for N in Ns for k in ks]
    if identity == "odd":
        return [_task(identity, N=N, k=k, Q=Q) for N in Ns for k in (1, 3, 5)]
    if identity == "prop5.1":
        return [_task(identity, pair=p, k=k, N=N, Q=Q) for p in pairs for k in ks for N in Ns]
    # bailey: built-in pairs to n <= Q, then each requested transform
    out = [_task(identity, pair=p, nmax=Q, Q=Q, rho=None) for p in pairs]
    out += [_task(identity, pair=p, nmax=min(Q, 6), Q=Q, rho=(str(r1), str(r2)))
            for p in pairs for r1, r2 in rhos]
    return out


def run_task(task: Task) -> list[ids.VerificationReport]:
    p = task.kwargs()
    name, Q = task.identity, p["Q"]
    N = p.get("N")
    if name == "thm1.1":
        return [ids.check_theorem_11(N, Q, get_table(RANK_S1, N, Q), get_table(CRANK_S2, N, Q))]
    if name == "bivariate":
        return [ids.check_rank_gf(N, Q, get_table(RANK_S1, N, Q)),
                ids.check_crank_gf(N, Q, get_table(CRANK_S2, N, Q))]
    if name == "eq3.2":
        return [ids.check_bivariate_identity_32(N, Q)]
    if name == "eq3.5":
        return [ids.check_bivariate_identity_35(N, Q)]
    if name == "thm2.2":
        return [ids.check_theorem_22(N, p["nu"], Q, get_table(RANK_S1, N, Q))]
    if name == "thm2.6":
        return [ids.check_theorem_26(N, p["nu"], Q, get_table(CRANK_S2, N, Q))]
    if name == "classical":
        return ids.check_classical_degeneration(N, p["nu"], Q) + ids.check_classical_tables(N, Q)
    k = p.get("k")
    if name == "thm2.8":
        return [ids.check_theorem_28(N, k, Q, get_table(RANK_S1, N, Q), get_table(CRANK_S2, N, Q))]
    if name == "cor5.2":
        return [ids.check_corollary_52(N, k, Q)]
    if name == "cor5.3":
        return [ids.check_corollary_53(N, k, Q, get_table(CRANK_S2, N, Q)),
                ids.check_corollary_53(N, k, Q, against="closed-form")]
    if name == "cor5.4":
        return [ids.check_corollary_54(N, k, Q)]
    if name == "fg":
        return (ids.check_fg(get_table(CRANK_S2, N, Q), k, Q)
                + ids.check_fg(get_table(RANK_S1, N, Q), k, Q))
    if name == "odd":
        return [ids.check_odd_vanishing(get_table(RANK_S1, N, Q), k, Q),
                ids.check_odd_vanishing(get_table(CRANK_S2, N, Q), k, Q)]
    pair = ids.BUILTIN_PAIRS[p["pair"]](Q)
    if name == "prop5.1":
        return [ids.check_prop_51(pair, k, N)]
    if name == "bailey":
        if p["rho"] is not None:
            r1, r2 = (Fraction(r) for r in p["rho"])
            pair = ids.bailey_transform(pair, r1, r2)
        return [ids.bailey_check(pair, p["nmax"])]
    raise ValueError(f"unknown identity {name!r}")


def run(tasks: list[Task], workers: int = 1) -> list[ids.VerificationReport]:
    """Run tasks; report order follows task order regardless of completion order."""
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run_task, tasks))
    else:
        chunks = [run_task(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]
