import argparse
import json
import logging
import sys
from pathlib import Path

from corequot.analytics_reporting.renderer import render
from corequot.analytics_reporting.reporter import coefficient_table, generate_verification_summary, summary_totals
from corequot.config_manager.config import ConfigError, load_config, validate_config
from corequot.enumeration.generator import PartitionClass, PartitionStream, count_class
from corequot.frobenius.symbols import (
    colored_payload,
    format_colored,
    format_frobenius,
    from_frobenius,
    frobenius_payload,
    is_t_core_frobenius,
    is_t_core_kolitsch,
    parse_frobenius,
    to_colored,
    to_frobenius,
)
from corequot.littlewood.decomposition import Decomposition, char_vector, compose, decompose
from corequot.logging_setup.logger import setup_logging
from corequot.partition_core.partition import (
    DomainError,
    classify_hooks,
    count_hooks_of_length,
    hook_multiset,
    is_t_core_bruteforce,
    parse_partition,
    strip_t_core,
)
from corequot.special_classes.classes import double_distinct
from corequot.verification_engine.engine import VerificationEngine
from corequot.wright.wright_map import array_payload, format_array, parse_array, wright_backward, wright_forward

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    """Raised instead of argparse's own exit so that usage errors exit with status 1."""
    pass


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _bracketed(lam):
    return f"({lam})"


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return EXIT_OK


def cmd_frobenius(args):
    if args.symbol is not None:
        lam = from_frobenius(parse_frobenius(args.symbol))
        return _emit(args, {"partition": list(lam.parts)}, str(lam))
    symbol = to_frobenius(parse_partition(args.partition))
    return _emit(args, frobenius_payload(symbol), format_frobenius(symbol))


def cmd_colored(args):
    colored = to_colored(to_frobenius(parse_partition(args.partition)), args.t)
    payload = colored_payload(colored)
    payload["bottom_display"] = [[c.value, c.color] for c in colored.display_bottom()]
    bottom = " ".join(str(c) for c in colored.display_bottom()) or "-"
    top = " ".join(str(c) for c in colored.top) or "-"
    text = f"{top} / {bottom}" if not args.aligned else format_colored(colored)
    return _emit(args, payload, text)


def cmd_wright(args):
    if args.backward is not None:
        array = wright_backward(args.backward, parse_partition(args.input))
        return _emit(args, array_payload(array), format_array(array))
    image = wright_forward(parse_array(args.input))
    payload = {"d": image.offset, "mu": list(image.mu.parts), "staircase_weight": image.staircase_weight}
    return _emit(args, payload, f"d={image.offset} mu={_bracketed(image.mu)}")


def cmd_decompose(args):
    decomposition = decompose(parse_partition(args.partition), args.t)
    text = "\n".join([
        f"core: {_bracketed(decomposition.core)}",
        "quotient: " + " ".join(_bracketed(q) for q in decomposition.quotient),
        "charvec: " + " ".join(str(w) for w in decomposition.charvec),
    ])
    return _emit(args, decomposition.to_payload(), text)


def _read_payload(source):
    if source == "-":
        raw = sys.stdin.read()
    else:
        raw = Path(source).read_text()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise DomainError(f"Invalid decomposition JSON: {e}") from None


def cmd_compose(args):
    if args.from_json is not None:
        decomposition = Decomposition.from_payload(_read_payload(args.from_json))
        core, quotient, t = decomposition.core, decomposition.quotient, decomposition.modulus
    else:
        if args.t is None or args.core is None:
            raise UsageError("compose needs --t and --core (or --from-json)")
        core, t = parse_partition(args.core), args.t
        quotient = [parse_partition(q) for q in args.quotient]
    lam = compose(core, quotient, t)
    return _emit(args, {"partition": list(lam.parts)}, str(lam))


def cmd_core(args):
    lam = parse_partition(args.partition)
    core = strip_t_core(lam, args.t) if args.method == "strip" else decompose(lam, args.t).core
    return _emit(args, {"core": list(core.parts)}, str(core))


def cmd_quotient(args):
    quotient = decompose(parse_partition(args.partition), args.t).quotient
    return _emit(args, {"quotient": [list(q.parts) for q in quotient]}, " ".join(_bracketed(q) for q in quotient))


def cmd_charvec(args):
    charvec = char_vector(parse_partition(args.partition), args.t)
    return _emit(args, {"charvec": list(charvec)}, " ".join(str(w) for w in charvec))


def cmd_is_core(args):
    lam = parse_partition(args.partition)
    symbol = to_frobenius(lam)
    methods = {
        "bruteforce": lambda: is_t_core_bruteforce(lam, args.t),
        "frobenius": lambda: is_t_core_frobenius(symbol, args.t),
        "kolitsch": lambda: is_t_core_kolitsch(to_colored(symbol, args.t)),
    }
    chosen = list(methods) if args.method == "all" else [args.method]
    results = {name: methods[name]() for name in chosen}
    if len(set(results.values())) > 1:
        logger.error(f"t-core predicates disagree on ({lam}), t={args.t}: {results}")
    text = "\n".join(f"{name}: {str(value).lower()}" for name, value in results.items())
    if len(results) == 1:
        text = str(next(iter(results.values()))).lower()
    return _emit(args, results, text)


def cmd_hooks(args):
    lam = parse_partition(args.partition)
    if args.length is not None:
        count = count_hooks_of_length(lam, args.length)
        return _emit(args, {"length": args.length, "count": count}, str(count))
    if args.classify:
        hooks = classify_hooks(lam)
        payload = [
            {"box": list(h.box), "case": h.case.value, "length": h.length, "lower": h.lower, "upper": h.upper}
            for h in hooks
        ]
        lines = []
        for h in hooks:
            bounds = "" if h.lower is None else f" ({h.lower}, {h.upper})"
            lines.append(f"({h.box[0]},{h.box[1]}) {h.case.value} {h.length}{bounds}")
        return _emit(args, payload, "\n".join(lines))
    multiset = hook_multiset(lam)
    ordered = sorted(multiset.items(), reverse=True)
    return _emit(args, {str(h): c for h, c in ordered}, " ".join(f"{h}:{c}" for h, c in ordered))


def cmd_double(args):
    lam = double_distinct(parse_partition(args.partition).parts)
    return _emit(args, {"partition": list(lam.parts)}, str(lam))


def _stream(args):
    return PartitionStream(args.n, PartitionClass(args.partition_class), args.t)


def cmd_list(args):
    found = list(_stream(args))
    return _emit(args, [list(lam.parts) for lam in found], "\n".join(_bracketed(lam) for lam in found))


def cmd_count(args):
    count = count_class(args.n, PartitionClass(args.partition_class), args.t)
    return _emit(args, {"count": count}, str(count))


def cmd_verify(args, config):
    verification = config['verification']
    for key in ("order", "max_n", "max_t", "workers", "seed"):
        value = getattr(args, key)
        if value is not None:
            verification[key] = value
    if args.max_n is not None:
        verification['wright_max_weight'] = args.max_n
    validate_config(config)
    engine = VerificationEngine(config)
    results = engine.run(args.checks, t=args.t)
    failed = [result for result in results if not result.passed]
    if args.json:
        print(json.dumps([result.to_payload() for result in results], indent=2))
    else:
        summary = generate_verification_summary(results)
        print(summary.to_string(index=False, na_rep="-"))
        totals = summary_totals(summary)
        print(f"{totals['checks']} checks: {totals['passed']} passed, {totals['failed']} failed")
        if args.table:
            for result in results:
                if hasattr(result, 'sides'):
                    print(f"\n{result.name} (t={result.t})")
                    print(coefficient_table(result).to_string())
        for result in failed:
            detail = result.mismatch if hasattr(result, 'mismatch') else "; ".join(result.failures)
            print(f"FAIL {result.name}: {detail}")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_render(args):
    print(render(parse_partition(args.partition), hooks=args.hooks))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print machine-readable JSON.")

    parser = CliParser(prog="corequot", description="Littlewood decomposition of integer partitions")
    parser.add_argument("--config", help="Path to a TOML configuration file.")
    parser.add_argument("--log-level", help="Overrides [logging] log_level (DEBUG, INFO, ...).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frobenius", parents=[common], help="Frobenius symbol of a partition (or back).")
    p.add_argument("partition", nargs="?", default="")
    p.add_argument("--symbol", help='Decode a symbol "a1 a2 ... / b1 b2 ..." instead.')
    p.set_defaults(handler=cmd_frobenius)

    p = sub.add_parser("colored", parents=[common], help="t-colored Frobenius symbol.")
    p.add_argument("partition")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--aligned", action="store_true", help="Keep the bottom row column-aligned.")
    p.set_defaults(handler=cmd_colored)

    p = sub.add_parser("wright", parents=[common], help="Wright's map on a two-rowed array.")
    p.add_argument("input", help='Array "a1 ... / b1 ..." or, with --backward, a partition.')
    p.add_argument("--backward", type=int, metavar="D", help="Invert the map for offset D.")
    p.set_defaults(handler=cmd_wright)

    for name, handler, help_text in (
        ("decompose", cmd_decompose, "Core, quotient and characteristic vector."),
        ("quotient", cmd_quotient, "t-quotient."),
        ("charvec", cmd_charvec, "Characteristic vector."),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("partition")
        p.add_argument("--t", type=int, required=True)
        p.set_defaults(handler=handler)

    p = sub.add_parser("compose", parents=[common], help="Rebuild a partition from core and quotient.")
    p.add_argument("quotient", nargs="*", help="The t quotient partitions; '()' for an empty one.")
    p.add_argument("--t", type=int)
    p.add_argument("--core")
    p.add_argument("--from-json", metavar="PATH", help="Read a decompose --json payload ('-' for stdin).")
    p.set_defaults(handler=cmd_compose)

    p = sub.add_parser("core", parents=[common], help="t-core.")
    p.add_argument("partition")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=["decomposition", "strip"], default="decomposition")
    p.set_defaults(handler=cmd_core)

    p = sub.add_parser("is-core", parents=[common], help="Test whether a partition is a t-core.")
    p.add_argument("partition")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=["bruteforce", "frobenius", "kolitsch", "all"], default="bruteforce")
    p.set_defaults(handler=cmd_is_core)

    p = sub.add_parser("hooks", parents=[common], help="Hook lengths.")
    p.add_argument("partition")
    p.add_argument("--length", type=int, help="Only count hooks of this length.")
    p.add_argument("--classify", action="store_true", help="Arm-Leg/Arm/Leg case and bounds per box.")
    p.set_defaults(handler=cmd_hooks)

    p = sub.add_parser("double", parents=[common], help="Doubled distinct partition of distinct parts.")
    p.add_argument("partition")
    p.set_defaults(handler=cmd_double)

    classes = [c.value for c in PartitionClass]
    for name, handler in (("list", cmd_list), ("count", cmd_count)):
        p = sub.add_parser(name, parents=[common], help=f"{name.capitalize()} partitions of n in a class.")
        p.add_argument("n", type=int)
        p.add_argument("--class", dest="partition_class", choices=classes, default="all")
        p.add_argument("--t", type=int)
        p.set_defaults(handler=handler)

    p = sub.add_parser("verify", parents=[common], help="Run verification sweeps and identity checks.")
    p.add_argument("checks", nargs="+", help="Sweep or identity names, or 'all'.")
    p.add_argument("--t", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-t", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--table", action="store_true", help="Print coefficient tables for identities.")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("render", help="ASCII Young diagram.")
    p.add_argument("partition")
    p.add_argument("--hooks", action="store_true")
    p.set_defaults(handler=cmd_render)

    return parser


def run(argv=None):
    """
    Runs one CLI command.

    Returns:
        int: 0 on success, 1 on usage, parse, domain or configuration errors,
             2 when a verification check fails.
    """
    try:
        args = build_parser().parse_args(argv)
        config = load_config(args.config)
    except (UsageError, ConfigError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(args.log_level or config['logging'].get('log_level'), config['logging'].get('log_file') or None)

    try:
        if args.handler is cmd_verify:
            return cmd_verify(args, config)
        return args.handler(args)
    except (UsageError, DomainError, ConfigError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
