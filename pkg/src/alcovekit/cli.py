"""Command line: tables, expansions, verification suites and class dumps.

Settings come from (highest first) command-line flags, a flat ``key = value``
config file given by ``--config``, and built-in defaults.  Output is JSON with
sorted keys, so identical settings give byte-identical output.

Exit codes: 0 success, 1 a verification failed, 2 usage or configuration error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from pathlib import Path

SCHEMA_VERSION = 1
GROUPS = ("A1", "A2", "A3", "B2", "C2", "G2")
SUITES = ("spherical", "hecke", "periodic", "ktheory", "oracle", "complex")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    group: str = "A1"
    depth: int = 6
    v_mode: str = "formal"
    oracle_p: int | None = None
    oracle_M: int | None = None
    suites: str = "all"
    output: str | None = None
    jobs: int = 1

    def validate(self, min_depth: int = 1) -> "RunConfig":
        if self.group not in GROUPS:
            raise ConfigError(f"unknown group {self.group!r}")
        if self.depth < min_depth:
            raise ConfigError(f"depth must be >= {min_depth}")
        if self.v_mode != "formal":
            try:
                Fraction(self.v_mode)
            except (ValueError, ZeroDivisionError):
                raise ConfigError("v_mode must be 'formal' or a rational number") from None
            if Fraction(self.v_mode) == 0:
                raise ConfigError("v_mode must be nonzero")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        if (self.oracle_p is None) != (self.oracle_M is None):
            raise ConfigError("oracle needs both oracle_p and oracle_M")
        if self.oracle_p is not None:
            if self.group != "A1":
                raise ConfigError("the finite oracle is only available for A1")
            if self.oracle_p < 2 or any(self.oracle_p % d == 0 for d in range(2, self.oracle_p)):
                raise ConfigError("oracle_p must be prime")
            if self.oracle_M < 2:
                raise ConfigError("oracle_M must be >= 2")
        for s in self.suite_list():
            if s not in SUITES:
                raise ConfigError(f"unknown suite {s!r}")
        if "oracle" in self.suites.split(",") and self.oracle_p is None:
            raise ConfigError("the oracle suite needs oracle_p and oracle_M")
        return self

    def suite_list(self) -> list[str]:
        names = [s.strip() for s in self.suites.split(",") if s.strip()]
        if names == ["all"]:
            return [s for s in SUITES if s != "oracle" or self.oracle_p is not None]
        return names


_INT_FIELDS = {"depth", "oracle_p", "oracle_M", "jobs"}


def read_config(path: str) -> dict:
    out = {}
    names = {f.name for f in fields(RunConfig)}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, value = (x.strip() for x in line.split("=", 1))
        if key not in names:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = _convert(key, value)
    return out


def _convert(key: str, value):
    if value is None:
        return None
    if key in _INT_FIELDS:
        try:
            return int(value)
        except ValueError:
            raise ConfigError(f"{key} must be an integer") from None
    return str(value)


def build_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        cfg = replace(cfg, **read_config(args.config))
    flags = {}
    for f in fields(RunConfig):
        val = getattr(args, f.name, None)
        if val is not None:
            flags[f.name] = _convert(f.name, val)
    return replace(cfg, **flags)


# ---------------------------------------------------------------------------
# formatting


def _coeff(x, cfg: RunConfig) -> str:
    from .scalars import format_laurent

    if cfg.v_mode != "formal":
        return str(x.specialize(Fraction(cfg.v_mode)))
    if all(e % 2 == 0 for e in x.c):
        return format_laurent(x.q_form(), "q")
    return str(x)


def _spherical_json(el, cfg: RunConfig) -> dict:
    from .scalars import height

    terms = [{"gamma": list(g), "coeff": _coeff(x, cfg)}
             for g, x in sorted(el.series.entries.items(), key=lambda t: (height(t[0]), t[0]))]
    return {"terms": terms, "depth": el.depth}


def _parse_vec(text: str, rank: int) -> tuple[int, ...]:
    try:
        vec = tuple(int(x) for x in text.split(",")) if text else (0,) * rank
    except ValueError:
        raise ConfigError(f"bad coroot vector {text!r}") from None
    if len(vec) != rank:
        raise ConfigError(f"coroot vector {text!r} needs {rank} entries")
    return vec


# ---------------------------------------------------------------------------
# commands


def cmd_kostant(cfg: RunConfig, args) -> tuple[dict, int]:
    from .rootdata import build_root_datum
    from .spherical import kostant_table

    rd = build_root_datum(cfg.group)
    rows = [{"gamma": list(g), "K": _coeff(k, cfg)} for g, k in kostant_table(rd, cfg.depth)]
    return {"command": "kostant", "group": cfg.group, "depth": cfg.depth, "rows": rows}, 0


def cmd_expand(cfg: RunConfig, args) -> tuple[dict, int]:
    from . import spherical
    from .rootdata import build_root_datum

    rd = build_root_datum(cfg.group)
    mu = _parse_vec(args.mu, rd.rank)
    out = {"command": "expand", "group": cfg.group, "what": args.what, "mu": list(mu), "depth": cfg.depth}
    if args.what == "c":
        out["element"] = _spherical_json(spherical.c_element(rd, mu, cfg.depth), cfg)
    elif args.what == "delta":
        out["element"] = _spherical_json(spherical.delta(rd, mu), cfg)
    elif args.what == "delta-in-c":
        combo = spherical.delta_in_c_basis(rd, mu)
        out["c_coefficients"] = [{"mu": list(m), "coeff": _coeff(a, cfg)} for m, a in sorted(combo.items())]
    elif args.what == "phi":
        try:
            word = tuple(int(x) for x in args.word.split(",")) if args.word else ()
        except ValueError:
            raise ConfigError("word must be comma-separated simple indices") from None
        if any(not 0 <= i < rd.rank for i in word):
            raise ConfigError("simple index out of range")
        src = spherical.delta(rd, mu) if args.of == "delta" else spherical.c_element(rd, mu, cfg.depth)
        img = spherical.phi_w(rd, word, src, cfg.depth)
        out["word"] = list(word)
        out["of"] = args.of
        out["element"] = _spherical_json(img, cfg)
    return out, 0


def _run_one(cfg: RunConfig, name: str, inject: str | None) -> list[dict]:
    from . import sl2oracle, suites
    from .rootdata import build_root_datum
    from .scalars import u_hecke

    rd = build_root_datum(cfg.group)
    model = sl2oracle.FiniteModel(cfg.oracle_p, cfg.oracle_M) if cfg.oracle_p is not None else None
    branch = -u_hecke if inject == "taction-sign" else u_hecke
    if name == "spherical":
        checks = suites.spherical_suite(rd, cfg.depth)
    elif name == "hecke":
        checks = suites.hecke_suite(rd)
    elif name == "periodic":
        checks = suites.periodic_suite(rd, cfg.depth, branch=branch, oracle=model)
    elif name == "ktheory":
        checks = suites.ktheory_suite(rd, min(cfg.depth, 4))
    elif name == "oracle":
        checks = suites.oracle_suite(model, cfg.depth)
    else:
        checks = suites.complex_suite(rd)
    return [c.to_json() for c in checks]


def run_suites(cfg: RunConfig, inject: str | None = None) -> dict:
    """Run the selected suites, in worker processes when jobs > 1; results keep suite order."""
    names = cfg.suite_list()
    if cfg.jobs == 1 or len(names) == 1:
        results = [_run_one(cfg, n, inject) for n in names]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(cfg.jobs, len(names))) as pool:
            results = list(pool.map(_run_one, [cfg] * len(names), names, [inject] * len(names)))
    return dict(zip(names, results))


def cmd_verify(cfg: RunConfig, args) -> tuple[dict, int]:
    report = run_suites(cfg, args.inject)
    passed = all(c["passed"] for checks in report.values() for c in checks)
    return {"command": "verify", "group": cfg.group, "depth": cfg.depth,
            "oracle": None if cfg.oracle_p is None else {"p": cfg.oracle_p, "M": cfg.oracle_M},
            "injected": args.inject, "suites": report, "passed": passed}, 0 if passed else 1


def cmd_complex(cfg: RunConfig, args) -> tuple[dict, int]:
    from .rootdata import build_root_datum, permutohedron_complex

    cx = permutohedron_complex(build_root_datum(cfg.group))
    exact = cx.is_exact()
    return {"command": "complex", "group": cfg.group,
            "counts": {str(k): v for k, v in cx.counts().items()},
            "homology_ranks": {str(k): v for k, v in cx.homology_ranks().items()},
            "d_squared_zero": cx.d_squared_zero(), "exact": exact}, 0 if exact else 1


def cmd_ktheory(cfg: RunConfig, args) -> tuple[dict, int]:
    from . import ktheory
    from .rootdata import build_root_datum

    rd = build_root_datum(cfg.group)
    k = ktheory.kappa(rd)
    classes = {"kappa": k, "structure": ktheory.structure_class(rd)}
    for i in range(rd.rank):
        classes[f"t1_{i}(kappa)"] = ktheory.t1_alpha(i, k)
        classes[f"dl_{i}(kappa)"] = ktheory.dl_action(i, k)
    for w, z in ktheory.zeta_basis(rd).items():
        classes[f"zeta(A_{w!r})"] = z
    return {"command": "ktheory", "group": cfg.group,
            "classes": {name: F.to_json() for name, F in classes.items()},
            "push_to_point": {name: str(ktheory.push_to_point(F)) for name, F in classes.items()}}, 0


COMMANDS = {"kostant": cmd_kostant, "expand": cmd_expand, "verify": cmd_verify,
            "complex": cmd_complex, "ktheory": cmd_ktheory}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value file with RunConfig fields")
    common.add_argument("--group", help="Cartan type: " + ", ".join(GROUPS))
    common.add_argument("--depth", help="truncation depth (height)")
    common.add_argument("--v-mode", dest="v_mode", help="'formal' or a rational value for v")
    common.add_argument("--oracle-p", dest="oracle_p", help="residue characteristic of the finite oracle")
    common.add_argument("--oracle-M", dest="oracle_M", help="truncation level of the finite oracle")
    common.add_argument("--output", help="write JSON here instead of stdout")

    parser = argparse.ArgumentParser(prog="alcovekit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("kostant", parents=[common], help="table of the q-Kostant partition function")
    ex = sub.add_parser("expand", parents=[common], help="expand c_mu, delta_mu, Phi_w(...) or delta-in-c")
    ex.add_argument("what", choices=["c", "delta", "phi", "delta-in-c"])
    ex.add_argument("--mu", default="", help="comma-separated coroot coordinates")
    ex.add_argument("--word", default="", help="comma-separated simple indices for phi")
    ex.add_argument("--of", choices=["delta", "c"], default="delta")
    ver = sub.add_parser("verify", parents=[common], help="run verification suites")
    ver.add_argument("--suites", help="comma list of " + ", ".join(SUITES) + " or 'all'")
    ver.add_argument("--jobs", help="worker processes for the suites (default 1)")
    ver.add_argument("--inject", choices=["taction-sign"], help="negative control: break an identity")
    sub.add_parser("complex", parents=[common], help="permutohedron complex report")
    sub.add_parser("ktheory", parents=[common], help="dump fixed-point classes")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        cfg = build_config(args).validate(min_depth=0 if args.command == "kostant" else 1)
        payload, code = COMMANDS[args.command](cfg, args)
    except (ConfigError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
