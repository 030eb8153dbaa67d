# Command-line surface.  Every subcommand prints one deterministic JSON
# report to stdout (canonical key order, exact fraction strings, no
# floats).  Exit codes: 0 = success and all requested checks pass, 1 = a
# check failed, 2 = usage error or malformed input (the diagnostic names
# the offending flag/field).

import argparse
import sys
import time

from .abelian import unit_group
from .brauer import (BUILTIN_GROUPS, bgstar, duality_certificate,
                     from_cayley_text, record_index, subgroup_lattice)
from .cycloideal import (CyclotomicLevel, ideal_J_full, ideal_J_imagquad,
                         ideal_J_minus, ideal_J_real, plus_quotient)
from .dirichlet import PlaceSet, l_value
from .ncideal import (IntegralityError, nc_ideal, subgroup_datum,
                      two_sided_check)
from .serialize import (FixtureError, element_payload, fraction_str,
                        lattice_payload, load_fixture, parse_element,
                        parse_lattice, to_json)
from .stickelberger import ramified_places, stickelberger
from .suites import SUITE_ALIASES, SUITE_PARAMS, SUITES, run_all, run_suite


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# flag tables (shared by argparse and the config file)

_FLAGS = {
    "stickelberger": {"modulus": int, "s": str, "r": int},
    "lvalue": {"modulus": int, "char": int, "r": int, "s": str},
    "ideal": {"family": str, "ell": int, "level": int, "r": int,
              "part": str, "units": str},
    "brauer-map": {"group": str, "cayley": str, "certify": bool},
    "nc-ideal": {"group": str, "cayley": str, "data": str},
    "check": {"suite": str, "ell": int, "levels": int, "r": int,
              "seed": int, "count": int, "max-modulus": int},
}

_HELP = {
    "stickelberger": "Stickelberger element of conductor m at s = r",
    "lvalue": "one Dirichlet L-value L_S(r, chi) as an exact number",
    "ideal": "a cyclotomic fractional ideal as an integer lattice",
    "brauer-map": "component map out of the conjugacy-class space",
    "nc-ideal": "two-sided ideal from annihilator data over a finite group",
    "check": "run a named check suite (or all of them)",
}


def _dest(key):
    return key.replace("-", "_")


def build_parser():
    top = argparse.ArgumentParser(
        prog="galideal",
        description="exact fractional Galois ideal computations")
    top.add_argument("--config", help="key=value defaults, one per line")
    top.add_argument("--timing", action="store_true",
                     help="include wall-clock milliseconds in the report "
                          "(off by default: it breaks byte determinism)")
    subs = top.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    for name, flags in _FLAGS.items():
        sub = subs.add_parser(name, help=_HELP[name])
        for key, kind in flags.items():
            if kind is bool:
                sub.add_argument("--" + key, action="store_true",
                                 default=None)
            else:
                sub.add_argument("--" + key, type=kind, default=None)
    return top


def read_config(path):
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as e:
        raise UsageError("cannot read config file: %s" % e)
    cfg = {}
    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError("config line %d: expected key=value, got %r"
                             % (i, raw))
        key, _, value = line.partition("=")
        cfg[key.strip()] = value.strip()
    return cfg


def _parse_bool(text, key):
    lowered = text.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise UsageError("config key %r: %r is not a boolean" % (key, text))


def apply_config(args, cfg):
    # flags given on the command line win; unknown keys are rejected
    flags = _FLAGS[args.subcommand]
    for key, text in cfg.items():
        if key not in flags:
            raise UsageError("config key %r is not a flag of %r"
                             % (key, args.subcommand))
        dest = _dest(key)
        if getattr(args, dest) is not None:
            continue
        kind = flags[key]
        if kind is bool:
            setattr(args, dest, _parse_bool(text, key))
        elif kind is int:
            try:
                setattr(args, dest, int(text))
            except ValueError:
                raise UsageError("config key %r: %r is not an integer"
                                 % (key, text))
        else:
            setattr(args, dest, text)


def require(args, *keys):
    for key in keys:
        if getattr(args, _dest(key)) is None:
            raise UsageError("--%s is required" % key)


# ---------------------------------------------------------------------------
# shared pieces

def parse_places(text):
    # "infty,7" -> PlaceSet([7]); the infinite place is always implied
    primes = []
    for token in text.split(","):
        token = token.strip()
        if not token or token == "infty":
            continue
        if not token.isdigit():
            raise UsageError("--s: %r is not 'infty' or a prime" % token)
        primes.append(int(token))
    try:
        return PlaceSet(primes)
    except AssertionError as e:
        raise UsageError("--s: %s" % e)


def places_text(places):
    return ",".join(["infty"] + [str(p) for p in sorted(places.primes)])


def cyclotomic_payload(v):
    if v.is_rational():
        return fraction_str(v.as_fraction())
    return {"root-of-unity-order": v.order,
            "coordinates": [fraction_str(c) for c in v.coeffs]}


def load_group(args):
    if (args.group is None) == (args.cayley is None):
        raise UsageError("give exactly one of --group or --cayley")
    if args.group is not None:
        if args.group not in BUILTIN_GROUPS:
            raise UsageError("--group: unknown group %r (have: %s)"
                             % (args.group, ", ".join(sorted(BUILTIN_GROUPS))))
        return BUILTIN_GROUPS[args.group](), {"group": args.group}
    try:
        with open(args.cayley) as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError("cannot read --cayley file: %s" % e)
    try:
        return from_cayley_text(text), {"cayley": args.cayley}
    except (AssertionError, ValueError) as e:
        raise FixtureError("--cayley: %s" % e)


def read_fixture(path, kind):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError("cannot read fixture file: %s" % e)
    return load_fixture(text, kind)


# ---------------------------------------------------------------------------
# subcommands

def cmd_stickelberger(args):
    require(args, "modulus")
    m = args.modulus
    if m < 1:
        raise UsageError("--modulus must be a positive integer")
    places = ramified_places(m) if args.s is None else parse_places(args.s)
    r = 0 if args.r is None else args.r
    if r > 0:
        raise UsageError("--r must be a non-positive integer")
    if not places.covers_modulus(m):
        raise UsageError("--s must contain every prime dividing the modulus")
    st = stickelberger(m, places, r)
    report = {
        "command": "stickelberger",
        "inputs": {"modulus": m, "places": places_text(places), "r": r},
        "element": element_payload(st.element),
    }
    return report, 0


def cmd_lvalue(args):
    require(args, "modulus", "char")
    m = args.modulus
    if m < 1:
        raise UsageError("--modulus must be a positive integer")
    g = unit_group(m)
    if not 0 <= args.char < g.order:
        raise UsageError("--char must lie in [0, %d) for modulus %d"
                         % (g.order, m))
    chi = g.character(args.char)
    r = 0 if args.r is None else args.r
    if r > 0:
        raise UsageError("--r must be a non-positive integer")
    places = ramified_places(m) if args.s is None else parse_places(args.s)
    value = l_value(r, chi, places)
    report = {
        "command": "lvalue",
        "inputs": {"modulus": m, "char": args.char, "r": r,
                   "places": places_text(places)},
        "value": cyclotomic_payload(value),
    }
    return report, 0


def cmd_ideal(args):
    require(args, "ell")
    family = args.family or "cyclotomic"
    if family != "cyclotomic":
        raise UsageError("--family: only 'cyclotomic' is available")
    part = args.part or "full"
    if part not in ("full", "minus", "plus", "imagquad"):
        raise UsageError("--part must be full, minus, plus, or imagquad")
    level_n = args.level or 0
    if level_n < 0:
        raise UsageError("--level must be a non-negative integer")
    try:
        lev = CyclotomicLevel(args.ell, level_n)
    except (ValueError, AssertionError) as e:
        raise UsageError("--ell: %s" % e)
    r = 0 if args.r is None else args.r
    if part != "minus" and args.r is not None:
        raise UsageError("--r only applies to --part minus")
    units = None
    if args.units is not None:
        if part not in ("full", "plus", "imagquad"):
            raise UsageError("--units only applies to parts built from "
                             "the real half (full, plus, imagquad)")
        fixture = read_fixture(args.units, "units")
        if "lattice" not in fixture:
            raise FixtureError("fixture is missing the 'lattice' field")
        units = parse_lattice(fixture["lattice"], "lattice")
        want = tuple(plus_quotient(lev.modulus).label(a)
                     for a in plus_quotient(lev.modulus).elements)
        if units.labels != want:
            raise FixtureError("field 'lattice.ambient': expected the "
                               "plus-quotient labels %r" % (list(want),))
    try:
        if part == "minus":
            ideal = ideal_J_minus(lev, r)
        elif part == "plus":
            ideal = ideal_J_real(lev, units)
        elif part == "imagquad":
            ideal = ideal_J_imagquad(lev, units)
        else:
            ideal = ideal_J_full(lev, units)
    except (ValueError, AssertionError) as e:
        raise UsageError(str(e))
    inputs = {"family": family, "ell": args.ell, "level": level_n,
              "part": part}
    if part == "minus":
        inputs["r"] = r
    if args.units is not None:
        inputs["units"] = args.units
    report = {
        "command": "ideal",
        "inputs": inputs,
        "lattice": lattice_payload(ideal),
    }
    return report, 0


def cmd_brauer_map(args):
    G, echo = load_group(args)
    bmap = bgstar(G)
    report = {
        "command": "brauer-map",
        "inputs": dict(echo, certify=bool(args.certify)),
        "order": G.order,
        "class-labels": list(bmap.space.labels),
        "row-labels": list(bmap.long_labels()),
        "matrix": [list(row) for row in bmap.matrix],
        "rank": bmap.rank,
        "injective": bmap.injective,
    }
    code = 0 if bmap.injective else 1
    if args.certify:
        cert = duality_certificate(bmap)
        report["duality"] = {
            "passed": cert.passed,
            "checked": cert.checked,
            "witness": list(cert.witness) if cert.witness else None,
        }
        if not cert.passed:
            code = 1
    return report, code


def _parse_data_fixture(G, fixture):
    if "ell" not in fixture:
        raise FixtureError("fixture is missing the 'ell' field")
    ell = fixture["ell"]
    if not isinstance(ell, int) or ell < 2:
        raise FixtureError("field 'ell' must be an integer prime")
    entries = fixture.get("data")
    if not isinstance(entries, list) or not entries:
        raise FixtureError("field 'data' must be a non-empty list")
    records = subgroup_lattice(G)
    by_label = {G.label(g): g for g in G.elements}
    data = []
    for i, entry in enumerate(entries):
        field = "data[%d]" % i
        if not isinstance(entry, dict):
            raise FixtureError("field %r must be an object" % field)
        labels = entry.get("subgroup")
        if not isinstance(labels, list):
            raise FixtureError("field '%s.subgroup' must be a list of "
                               "element labels" % field)
        members = []
        for lab in labels:
            if lab not in by_label:
                raise FixtureError("field '%s.subgroup': unknown element "
                                   "label %r" % (field, lab))
            members.append(by_label[lab])
        try:
            rec = records[record_index(records, members)]
        except KeyError:
            raise FixtureError("field '%s.subgroup': not a subgroup of the "
                               "given group" % field)
        if "alpha" not in entry or "beta" not in entry:
            raise FixtureError("field %r needs 'alpha' and 'beta'" % field)
        alpha = parse_element(G, entry["alpha"], field + ".alpha")
        beta = parse_element(G, entry["beta"], field + ".beta")
        data.append(subgroup_datum(rec, alpha, beta, ell))
    return ell, data


def cmd_nc_ideal(args):
    require(args, "data")
    G, echo = load_group(args)
    fixture = read_fixture(args.data, "annihilator-data")
    ell, data = _parse_data_fixture(G, fixture)
    try:
        ideal = nc_ideal(G, data)
    except IntegralityError as e:
        raise FixtureError("field 'data': %s" % e)
    verdict = two_sided_check(ideal)
    report = {
        "command": "nc-ideal",
        "inputs": dict(echo, data=args.data, ell=ell),
        "generators": [element_payload(x) for x in ideal.generators],
        "lattice": lattice_payload(ideal.lattice),
        "two-sided": {
            "passed": verdict.passed,
            "witness": list(verdict.witness) if verdict.witness else None,
        },
    }
    return report, 0 if verdict.passed else 1


def cmd_check(args):
    suite = args.suite or "all"
    known = sorted(set(SUITES) | set(SUITE_ALIASES))
    if suite != "all" and suite not in known:
        raise UsageError("--suite: unknown suite %r (have: all, %s)"
                         % (suite, ", ".join(known)))
    params = {
        "ells": (args.ell,) if args.ell is not None else None,
        "levels": (args.levels,) if args.levels is not None else None,
        "rs": (args.r,) if args.r is not None else None,
        "seed": args.seed,
        "count": args.count,
        "max_modulus": args.max_modulus,
    }
    given = {k for k, v in params.items() if v is not None}
    if suite == "all":
        if given:
            raise UsageError("suite narrowing flags need a specific --suite")
        results = run_all()
    else:
        canonical = SUITE_ALIASES.get(suite, suite)
        allowed = set(SUITE_PARAMS[canonical])
        extras = given - allowed
        if extras:
            raise UsageError("suite %r does not accept: %s"
                             % (suite, ", ".join(sorted(extras))))
        results = run_suite(suite, **params)
    inputs = {"suite": suite}
    for key in ("ell", "levels", "r", "seed", "count", "max_modulus"):
        value = getattr(args, key)
        if value is not None:
            inputs[key.replace("_", "-")] = value
    failures = [r for r in results if not r.passed]
    report = {
        "command": "check",
        "inputs": inputs,
        "results": [{"suite": r.suite, "name": r.name,
                     "passed": r.passed, "detail": r.detail}
                    for r in results],
        "checks": len(results),
        "failures": len(failures),
        "passed": not failures,
    }
    return report, 0 if not failures else 1


_COMMANDS = {
    "stickelberger": cmd_stickelberger,
    "lvalue": cmd_lvalue,
    "ideal": cmd_ideal,
    "brauer-map": cmd_brauer_map,
    "nc-ideal": cmd_nc_ideal,
    "check": cmd_check,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand is None:
        parser.print_usage(sys.stderr)
        return 2
    started = time.monotonic()
    try:
        if args.config is not None:
            apply_config(args, read_config(args.config))
        report, code = _COMMANDS[args.subcommand](args)
    except (UsageError, FixtureError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    if args.timing:
        report["timing-ms"] = int((time.monotonic() - started) * 1000)
    sys.stdout.write(to_json(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
