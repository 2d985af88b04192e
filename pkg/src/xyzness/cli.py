"""Command-line front end: ``xyzness verify | ness | profile | scan | periodic``.

Parameters come from a JSON file (``--params``) and may be overridden by
flags.  Complex numbers are written as ``[re, im]``; plain numbers are real.
Records are JSON, tables are CSV.  Exit codes: 0 success, 1 a check failed,
2 bad configuration, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
import time
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import __version__
from .channels import Side, apply_kraus, boundary_state, kraus_pair, kraus_pair_from_gate, reset_channel_direct
from .circuit import find_ness, single_site_density, trace_distance
from .gate import ModelParams, ParameterError, Regime, SingularParameterError, build_gate
from .helix import (
    THREADS_ENV,
    Chirality,
    ClosureViolatedError,
    Geometry,
    HelixSpec,
    bulk_relation_residuals,
    closure_mismatch,
    eta_scan,
    helix_alpha_R,
    helix_factors,
    magnetization_profile,
    periodic_checks,
)
from .mpa import Parity, PoleAtSiteError, boundary_residuals, contract_ness, verify_rll
from .theta import IDENTITIES, check_theta_identity

__all__ = [
    "ConfigError",
    "CheckFailed",
    "RunConfig",
    "ResultRecord",
    "parse_complex",
    "parse_grid",
    "config_from_dict",
    "read_config",
    "write_config",
    "grid_values",
    "cmd_verify",
    "cmd_ness",
    "cmd_profile",
    "cmd_scan",
    "cmd_periodic",
    "main",
    "EXIT_OK",
    "EXIT_CHECK",
    "EXIT_CONFIG",
    "EXIT_IO",
]

log = logging.getLogger("xyzness")

EXIT_OK, EXIT_CHECK, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3
COMMANDS = ("verify", "ness", "profile", "scan", "periodic")
ENGINES = ("mpa", "oracle", "both")
SCAN_COLUMNS = ("eta", "f1", "f2_plus", "f2_minus")
PROFILE_COLUMNS = ("site", "sx", "sy", "sz", "parity")


class ConfigError(ValueError):
    pass


class CheckFailed(RuntimeError):
    pass


# ------------------------------------------------------------------ config

def parse_complex(value, name: str = "value") -> complex:
    """Accept a number or a two-element ``[re, im]`` list."""
    if isinstance(value, bool):
        raise ConfigError(f"{name}: expected a number or [re, im], got {value!r}")
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    ):
        return complex(value[0], value[1])
    raise ConfigError(f"{name}: expected a number or [re, im], got {value!r}")


def _complex_json(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def _resolve_eta(value, tau: complex) -> complex:
    if isinstance(value, dict):
        k = value.get("k", 1)
        if "mod2_over" in value:
            return complex(2 * k / value["mod2_over"])
        if "mod2tau_over" in value:
            return 2 * k * tau / value["mod2tau_over"]
        raise ConfigError(f"eta: unknown shorthand {value!r} (use mod2_over or mod2tau_over)")
    return parse_complex(value, "eta")


def parse_grid(text) -> tuple:
    """``'start:stop:points'`` (or a three-element list) to ``(start, stop, points)``."""
    try:
        if isinstance(text, str):
            a, b, n = text.split(":")
        else:
            a, b, n = text
        start, stop, pts = float(a), float(b), int(n)
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"grid must be start:stop:points, got {text!r}") from exc
    if pts < 2:
        raise ConfigError("grid needs at least 2 points")
    return start, stop, pts


@dataclass(frozen=True)
class RunConfig:
    command: str
    params: ModelParams
    grid: tuple | None = None
    tol: float | None = None
    out: str | None = None
    engine: str = "mpa"
    oracle_every: int = 8
    M: int | None = None
    chirality: str = "+"
    parity: str = "even"
    seed: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.engine not in ENGINES:
            raise ConfigError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        if self.tol is not None and not self.tol > 0:
            raise ConfigError("tolerances must be positive")
        if self.grid is not None and self.grid[2] < 2:
            raise ConfigError("grid needs at least 2 points")
        if self.oracle_every < 0:
            raise ConfigError("oracle_every must be >= 0")
        if self.parity not in ("even", "odd", "both"):
            raise ConfigError("parity must be even, odd or both")
        if self.chirality not in ("+", "-"):
            raise ConfigError("chirality must be '+' or '-'")

    def to_dict(self) -> dict:
        p = self.params
        return {
            "command": self.command,
            "u": _complex_json(p.u),
            "eta": _complex_json(p.eta),
            "tau": _complex_json(p.tau),
            "alpha_L": _complex_json(p.alpha_L),
            "alpha_R": _complex_json(p.alpha_R),
            "N": p.N,
            "regime": p.regime.value,
            "grid": list(self.grid) if self.grid else None,
            "tol": self.tol,
            "out": self.out,
            "engine": self.engine,
            "oracle_every": self.oracle_every,
            "M": self.M,
            "chirality": self.chirality,
            "parity": self.parity,
            "seed": self.seed,
        }


def config_from_dict(d: dict, command: str | None = None) -> RunConfig:
    """Build a :class:`RunConfig` from a parsed JSON object.

    ``eta`` may be given directly or as ``{"mod2_over": M, "k": k}``
    (``eta = 2k/M``) or ``{"mod2tau_over": M, "k": k}`` (``eta = 2k tau/M``).
    ``alpha_R`` may be a number, ``"alpha_L+u"`` or
    ``{"helix": "+"|"-", "kinks": m}``.  ``regime`` is ``"A"``, ``"B"``,
    ``"general"`` or ``"auto"`` (default).
    """
    if not isinstance(d, dict):
        raise ConfigError("configuration must be a JSON object")
    try:
        tau = parse_complex(d["tau"], "tau")
        u = parse_complex(d["u"], "u")
        eta = _resolve_eta(d["eta"], tau)
    except KeyError as exc:
        raise ConfigError(f"missing parameter {exc.args[0]!r}") from None
    aL = parse_complex(d.get("alpha_L", 0.0), "alpha_L")
    N = d.get("N", 3)
    regime = d.get("regime", "auto")
    aR_raw = d.get("alpha_R", 0.0)
    try:
        if regime == "auto":
            base = ModelParams.infer(u, eta, tau, aL, 0.0, N)
        else:
            base = ModelParams(u, eta, tau, aL, 0.0, N, Regime(regime))
        if aR_raw == "alpha_L+u":
            aR = aL + u
        elif isinstance(aR_raw, dict) and "helix" in aR_raw:
            aR = helix_alpha_R(base, Chirality(aR_raw["helix"]), int(aR_raw.get("kinks", 0)))
        else:
            aR = parse_complex(aR_raw, "alpha_R")
        params = base.with_(alpha_R=aR)
    except (ParameterError, ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from exc
    grid = d.get("grid")
    cfg = RunConfig(
        command=command or d.get("command", "verify"),
        params=params,
        grid=parse_grid(grid) if grid is not None else None,
        tol=d.get("tol"),
        out=d.get("out"),
        engine=d.get("engine", "mpa"),
        oracle_every=int(d.get("oracle_every", 8)),
        M=d.get("M"),
        chirality=d.get("chirality", "+"),
        parity=d.get("parity", "even"),
        seed=int(d.get("seed", 0)),
    )
    return cfg


def read_config(path, command: str | None = None) -> RunConfig:
    text = Path(path).read_text()
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
    return config_from_dict(d, command)


def write_config(cfg: RunConfig, path) -> None:
    Path(path).write_text(json.dumps(cfg.to_dict(), indent=2) + "\n")


def grid_values(cfg: RunConfig) -> list:
    """Anisotropies of the scan grid: ``eta = s`` (case B) or ``eta = i s`` (case A)."""
    if cfg.grid is None:
        raise ConfigError("scan needs a grid (--grid start:stop:points)")
    start, stop, pts = cfg.grid
    s = np.linspace(start, stop, pts)
    reg = cfg.params.regime
    if reg is Regime.CASE_B:
        return [complex(x) for x in s]
    if reg is Regime.CASE_A:
        return [complex(0, x) for x in s]
    raise ConfigError("scans need case A or case B parameters")


# ------------------------------------------------------------------ records

@dataclass
class ResultRecord:
    command: str
    config: dict
    payload: dict
    started: float
    finished: float
    version: str = __version__
    ok: bool = True
    table: list | None = field(default=None, repr=False)
    columns: tuple | None = None

    def to_json(self) -> str:
        body = {
            "command": self.command,
            "version": self.version,
            "ok": self.ok,
            "started": self.started,
            "finished": self.finished,
            "config": self.config,
            "payload": _finite(self.payload),
        }
        return json.dumps(body, indent=2, allow_nan=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.table:
            w.writerow([repr(float(x)) if isinstance(x, (float, np.floating)) else x for x in row])
        return buf.getvalue()


def _finite(obj):
    # JSON has no NaN; scan failures become null.
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    if isinstance(obj, (float, np.floating)):
        return float(obj) if math.isfinite(obj) else None
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, complex):
        return _complex_json(obj)
    return obj


def _matrix_json(A) -> list:
    return [[_complex_json(complex(x)) for x in row] for row in np.asarray(A)]


# ------------------------------------------------------------------ commands

def _random_args(rng, k):
    return [complex(x, y) for x, y in zip(rng.uniform(-1, 1, k), rng.uniform(-0.25, 0.25, k))]


def cmd_verify(cfg: RunConfig) -> ResultRecord:
    """Run the identity suite; ``ok`` is False if any residual exceeds its threshold."""
    t0 = time.time()
    p = cfg.params
    rng = np.random.default_rng(cfg.seed)
    nargs = {"sum_product": 2, "antisymmetric": 2, "quartic": 4, "parity": 1, "quasi_period": 1, "cross_nome": 1}
    checks = []

    def add(name, residual, threshold):
        checks.append({"check": name, "residual": float(residual), "threshold": threshold, "pass": bool(residual < threshold)})

    for name in IDENTITIES:
        worst = max(check_theta_identity(name, _random_args(rng, nargs[name]), p.tau) for _ in range(50))
        add(f"theta:{name}", worst, 1e-12)
    G = build_gate(p)
    U = G.entries
    Um = build_gate(u=-p.u, eta=p.eta, tau=p.tau).entries
    add("gate:inverse", np.linalg.norm(U @ Um - np.eye(4)), 1e-12)
    add("gate:parity", np.linalg.norm(U - build_gate(u=-p.u, eta=-p.eta, tau=p.tau).entries), 1e-12)
    if p.unitary:
        add("gate:unitary", G.unitarity_error, 1e-12)
        basis = [np.eye(2)[:, [i]] @ np.eye(2)[[j], :] for i in range(2) for j in range(2)]
        for side, alpha in ((Side.LEFT, p.alpha_L), (Side.RIGHT, p.alpha_R)):
            t = boundary_state(alpha, p.tau)
            for label, kp in (("closed", kraus_pair(side, p, t)), ("gate", kraus_pair_from_gate(side, U, t))):
                add(f"kraus:{side.value}:{label}:complete", kp.completeness_error(), 1e-12)
                diff = max(
                    np.linalg.norm(apply_kraus(kp, E) - reset_channel_direct(side, U, t.amplitudes, E, validate=False))
                    for E in basis
                )
                add(f"kraus:{side.value}:{label}:channel", diff, 1e-12)
    rll = verify_rll(p, range(-4, 5))
    for k, v in rll.items():
        if k != "max":
            add(f"rll:{k}", v, 1e-10)
    if p.unitary:
        try:
            b = boundary_residuals(p)
            add("boundary:left", b["left"], 1e-9)
            add("boundary:right", b["right"], 1e-9)
        except (PoleAtSiteError, SingularParameterError, ZeroDivisionError) as exc:
            log.warning("boundary equations skipped: %s", exc)
        bulk = bulk_relation_residuals(p, seed=cfg.seed)
        add("helix:rll1", bulk["rll1"], 1e-11)
        add("helix:rll2", bulk["rll2"], 1e-11)
    ok = all(c["pass"] for c in checks)
    return ResultRecord("verify", cfg.to_dict(), {"checks": checks}, t0, time.time(), ok=ok)


def _mpa_rho(p: ModelParams, parity: Parity) -> np.ndarray:
    try:
        return contract_ness(p, parity).rho
    except PoleAtSiteError:
        log.info("Lax pole at these parameters; using the regularized limit")
        return contract_ness(p, parity, regularize=True).rho


def _warn_trivial(p: ModelParams):
    if abs(p.u) < 1e-14:
        log.warning("u = 0: the gate is the identity and the fixed point is not unique")


def cmd_ness(cfg: RunConfig) -> ResultRecord:
    t0 = time.time()
    p = cfg.params
    if not p.unitary:
        raise ConfigError("ness needs case A or case B parameters")
    _warn_trivial(p)
    tol = cfg.tol or 1e-12
    payload = {"N": p.N}
    rho = None
    if cfg.engine in ("mpa", "both") and abs(p.u) >= 1e-14:
        rho = _mpa_rho(p, Parity.EVEN_TOP)
    if cfg.engine in ("oracle", "both") or rho is None:
        res = find_ness(p, tol=tol)
        payload["oracle"] = {
            "iterations": res.iterations,
            "residual": res.residual,
            "converged": res.converged,
            "degenerate": res.degenerate,
        }
        if rho is not None:
            payload["trace_distance"] = trace_distance(rho, res.rho)
        else:
            rho = res.rho
    w = np.sort(np.linalg.eigvalsh(rho))[::-1]
    prof = magnetization_profile(rho)
    payload.update(
        {
            "purity": float(np.trace(rho @ rho).real),
            "rank": int(np.sum(w > 1e-8)),
            "eigenvalues": [float(x) for x in w[: min(8, len(w))]],
            "rho_site1": _matrix_json(single_site_density(rho, 0)),
            "magnetization": [list(r[1:4]) for r in prof.rows()],
        }
    )
    tdist = payload.get("trace_distance")
    ok = tdist is None or tdist < 1e-8
    return ResultRecord("ness", cfg.to_dict(), payload, t0, time.time(), ok=ok)


def _parities(cfg):
    return ["even", "odd"] if cfg.parity == "both" else [cfg.parity]


def cmd_profile(cfg: RunConfig) -> ResultRecord:
    """Magnetization profile of a ring helix (``M`` set) or of the open-chain NESS."""
    t0 = time.time()
    p = cfg.params
    rows = []
    payload = {}
    if cfg.M is not None:
        M = int(cfg.M)
        err = closure_mismatch(p, M)
        payload.update({"geometry": "periodic", "M": M, "closure_mismatch": err})
        if err > 1e-9:
            raise ClosureViolatedError(f"eta M = {p.eta * M} violates the closure condition")
        spec = HelixSpec(p.alpha_L, M, Chirality(cfg.chirality), 0, Geometry.PERIODIC_EVEN)
        for par in _parities(cfg):
            prof = magnetization_profile(helix_factors(spec, p, Parity(par)), par)
            rows.extend(prof.rows())
    else:
        if not p.unitary:
            raise ConfigError("open-chain profiles need case A or case B parameters")
        _warn_trivial(p)
        payload.update({"geometry": "open", "N": p.N})
        for par in _parities(cfg):
            parity = Parity(par)
            if cfg.engine == "oracle" or abs(p.u) < 1e-14:
                res = find_ness(p, tol=cfg.tol or 1e-12, odd=True)
                rho = res.rho if parity is Parity.EVEN_TOP else res.rho_odd
            else:
                rho = _mpa_rho(p, parity)
            rows.extend(magnetization_profile(rho, par).rows())
    payload["rows"] = len(rows)
    return ResultRecord("profile", cfg.to_dict(), payload, t0, time.time(), table=rows, columns=PROFILE_COLUMNS)


def cmd_scan(cfg: RunConfig) -> ResultRecord:
    t0 = time.time()
    p = cfg.params
    etas = grid_values(cfg)
    base = p.with_(alpha_R=p.alpha_L + p.u) if abs(p.alpha_R - (p.alpha_L + p.u)) > 1e-12 else p
    if base is not p:
        log.warning("scan resets alpha_R to alpha_L + u")
    samples = eta_scan(base, etas, engine=cfg.engine, oracle_every=cfg.oracle_every, tol=cfg.tol or 1e-12)
    coord = (lambda e: e.real) if p.regime is Regime.CASE_B else (lambda e: e.imag)
    rows = [(float(coord(s.eta)), s.f1, s.f2_plus, s.f2_minus) for s in samples]
    points = [
        {"eta": coord(s.eta), "engine": s.engine, "error": s.error, "oracle_distance": s.oracle_distance}
        for s in samples
    ]
    failed = [pt for pt in points if pt["engine"] == "none"]
    dists = [s.oracle_distance for s in samples if s.oracle_distance is not None]
    payload = {
        "points": points,
        "failures": len(failed),
        "max_oracle_distance": max(dists) if dists else None,
        "eta_axis": "real" if p.regime is Regime.CASE_B else "imaginary",
    }
    ok = not failed and all(d < 1e-8 for d in dists)
    return ResultRecord("scan", cfg.to_dict(), payload, t0, time.time(), ok=ok, table=rows, columns=SCAN_COLUMNS)


def cmd_periodic(cfg: RunConfig) -> ResultRecord:
    t0 = time.time()
    if cfg.M is None:
        raise ConfigError("periodic needs a ring size M")
    tol = cfg.tol or 1e-10
    rep = periodic_checks(cfg.params, int(cfg.M), seed=cfg.seed)
    payload = {
        "M": rep.M,
        "stationarity": rep.stationarity,
        "odd_stationarity": rep.odd_stationarity,
        "max_residual": rep.max_residual,
        "threshold": tol,
        "gram_rank": rep.gram_rank,
        "ket_span_rank": rep.ket_span_rank,
        "conjectured_degeneracy": rep.conjectured_degeneracy,
        "alpha_samples": rep.n_samples,
        "gram_samples": rep.n_gram_samples,
    }
    return ResultRecord("periodic", cfg.to_dict(), payload, t0, time.time(), ok=rep.max_residual < tol)


_DISPATCH = {
    "verify": cmd_verify,
    "ness": cmd_ness,
    "profile": cmd_profile,
    "scan": cmd_scan,
    "periodic": cmd_periodic,
}


# ------------------------------------------------------------------ output

def _gnuplot(rec: ResultRecord, csv_path: Path) -> str:
    if rec.command == "scan":
        return (
            "set datafile separator ','\nset key autotitle columnhead\nset xlabel 'eta'\n"
            f"plot '{csv_path.name}' using 1:(-$2) with lines title '-f1', "
            "'' using 1:3 with lines title 'f2(+eta)', '' using 1:4 with lines title 'f2(-eta)'\n"
        )
    return (
        "set datafile separator ','\nset key autotitle columnhead\nset xlabel 'site'\n"
        f"plot '{csv_path.name}' using 1:2 with linespoints title 'sx', "
        "'' using 1:3 with linespoints title 'sy', '' using 1:4 with linespoints title 'sz'\n"
    )


def _emit(rec: ResultRecord, out: str | None, gnuplot: bool, stream) -> None:
    if out is None:
        if rec.table is not None:
            stream.write(rec.to_csv())
        else:
            stream.write(rec.to_json())
        return
    path = Path(out)
    stem = path.with_suffix("") if path.suffix in (".json", ".csv") else path
    if stem.parent and not stem.parent.exists():
        stem.parent.mkdir(parents=True)
    stem.with_suffix(".json").write_text(rec.to_json())
    if rec.table is not None:
        csv_path = stem.with_suffix(".csv")
        csv_path.write_text(rec.to_csv())
        if gnuplot:
            stem.with_suffix(".gp").write_text(_gnuplot(rec, csv_path))


def _summary(rec: ResultRecord) -> str:
    pl = rec.payload
    if rec.command == "verify":
        lines = [f"{'PASS' if c['pass'] else 'FAIL'}  {c['check']:<32} {c['residual']:.3e}  < {c['threshold']:.0e}" for c in pl["checks"]]
        return "\n".join(lines)
    if rec.command == "ness":
        s = f"N={pl['N']} purity={pl['purity']:.12f} rank={pl['rank']}"
        if "trace_distance" in pl:
            s += f" trace_distance={pl['trace_distance']:.3e}"
        return s
    if rec.command == "periodic":
        return (
            f"M={pl['M']} max stationarity residual={pl['max_residual']:.3e} (threshold {pl['threshold']:.0e}); "
            f"projector Gram rank={pl['gram_rank']}, ket span rank={pl['ket_span_rank']}, "
            f"conjectured degeneracy={pl['conjectured_degeneracy']}"
        )
    if rec.command == "scan":
        return f"{len(pl['points'])} points, {pl['failures']} failed, max oracle distance={pl['max_oracle_distance']}"
    return f"{pl['rows']} profile rows"


# ------------------------------------------------------------------ entry point

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="xyzness",
        description=__doc__.splitlines()[0],
        epilog=f"Scan points run on ${THREADS_ENV} threads (default 1).",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--params", required=True, help="JSON parameter file")
        sp.add_argument("--engine", choices=ENGINES, help="NESS engine (default mpa)")
        sp.add_argument("--tol", type=float, help="tolerance (NESS convergence or periodic threshold)")
        sp.add_argument("--out", help="output path stem; writes STEM.json and STEM.csv")
        sp.add_argument("--grid", help="scan grid start:stop:points")
        sp.add_argument("--oracle-every", type=int, dest="oracle_every", help="oracle cross-check stride (0 = off)")
        sp.add_argument("--M", type=int, help="ring size for profile/periodic")
        sp.add_argument("--parity", choices=("even", "odd", "both"))
        sp.add_argument("--chirality", choices=("+", "-"))
        sp.add_argument("--seed", type=int)
        sp.add_argument("--gnuplot", action="store_true", help="also write a gnuplot script next to the CSV")
        sp.add_argument("-v", "--verbose", action="store_true")
    return ap


def _apply_overrides(cfg: RunConfig, args) -> RunConfig:
    changes = {}
    for name in ("engine", "tol", "out", "oracle_every", "M", "parity", "chirality", "seed"):
        v = getattr(args, name, None)
        if v is not None:
            changes[name] = v
    if args.grid is not None:
        changes["grid"] = parse_grid(args.grid)
    return replace(cfg, **changes) if changes else cfg


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        cfg = _apply_overrides(read_config(args.params, args.command), args)
        rec = _DISPATCH[cfg.command](cfg)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, ParameterError, ClosureViolatedError, SingularParameterError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        _emit(rec, cfg.out, args.gnuplot, stdout)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(_summary(rec), file=sys.stderr if cfg.out is None else stdout)
    if not rec.ok:
        print(f"{cfg.command}: check failed", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
