"""Command-line surface.

Exit codes: 0 ok, 1 violation/invalid certificate, 2 input error,
3 internal inconsistency.
"""

from __future__ import annotations

import functools
import json
import sys

import click

from .analysis import _run_method, anneal_search, experiment_table, exhaustive_L, rows_to_csv
from .certify import verify_mono_odd_cycle, verify_peel
from .colouring import (
    binary_colouring,
    colour_class,
    product_colouring,
    random_colouring,
    read_colouring,
    write_colouring,
)
from .errors import (
    InputError,
    InternalInconsistency,
    ParseError,
    PipelineAssertError,
)
from .graph import OddCycleCertificate
from .peeling import ShortCycle, peel
from .pipeline import (
    PipelineParams,
    default_k_rule,
    default_small_threshold_rule,
    find_mono_odd_cycle,
    proposition_pipeline,
)


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InternalInconsistency as exc:
            click.echo(f"internal inconsistency: {exc}", err=True)
            sys.exit(3)
        except PipelineAssertError as exc:
            click.echo(f"assert failed: {exc}", err=True)
            sys.exit(2)
        except (ParseError, InputError) as exc:
            click.echo(f"input error: {exc}", err=True)
            sys.exit(2)

    return wrapper


@click.group()
def main():
    """Short monochromatic odd cycles in edge-coloured complete graphs."""


@main.command()
@click.option("--kind", type=click.Choice(["binary", "product", "random"]), required=True)
@click.option("--q", "q", type=int, required=True)
@click.option("--n", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--in2", "in2", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_guarded
def gen(kind, q, n, seed, in2, out):
    """Generate a colouring file.

    binary: the all-bipartite colouring of K_{2^q}. random: uniform seeded
    colouring of K_n (needs --n, --seed). product: the product of the binary
    colouring of K_{2^q} with the colouring read from --in2.
    """
    if kind == "binary":
        colouring = binary_colouring(q)
    elif kind == "random":
        if n is None or seed is None:
            raise InputError("random generator needs --n and --seed")
        colouring = random_colouring(n, q, seed)
    else:
        if in2 is None:
            raise InputError("product generator needs --in2")
        colouring = product_colouring(binary_colouring(q), read_colouring(in2))
    write_colouring(colouring, out)
    click.echo(f"wrote {colouring.n}-vertex {colouring.q}-colouring to {out}")


def _write_certificate(result, path):
    cert = result.certificate
    colour = cert.colour if cert.colour is not None else "-"
    with open(path, "w") as fh:
        fh.write(f"cycle {colour} " + " ".join(str(v) for v in cert.vertices) + "\n")


def _read_certificate(path):
    with open(path) as fh:
        line = fh.readline().strip()
    parts = line.split()
    if len(parts) < 2 or parts[0] != "cycle":
        raise ParseError("certificate must start with 'cycle <colour> <v0> ...'", line=1)
    try:
        colour = None if parts[1] == "-" else int(parts[1])
        verts = tuple(int(tok) for tok in parts[2:])
    except ValueError:
        raise ParseError("certificate fields must be integers", line=1) from None
    return OddCycleCertificate(vertices=verts, colour=colour)


@main.command("find")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--method", type=click.Choice(["pipeline", "proposition", "oracle"]), required=True)
@click.option("--eps", type=float, default=0.5, show_default=True)
@click.option("--C", "big_c", type=float, default=4.0, show_default=True)
@click.option("--delta", type=float, default=1.0, show_default=True)
@click.option("--k-rule", "k_rule", type=str, default=None, help="expression in q, e.g. '8*q**3'")
@click.option("--small-rule", "small_rule", type=str, default=None, help="expression in q, e.g. '4*q**10'")
@click.option("--fallback", type=click.Choice(["oracle", "fail"]), default="oracle", show_default=True)
@click.option("--out-cert", type=click.Path(dir_okay=False), required=True)
@click.option("--trace", type=click.Path(dir_okay=False), required=True)
@_guarded
def find(infile, method, eps, big_c, delta, k_rule, small_rule, fallback, out_cert, trace):
    """Find a monochromatic odd cycle in a colouring file."""
    colouring = read_colouring(infile)
    spec = {"eps": eps, "C": big_c, "delta": delta, "fallback": fallback}
    if method == "pipeline":
        params = PipelineParams(
            eps=eps,
            C=big_c,
            k_of_q=_rule(k_rule) if k_rule else default_k_rule,
            small_threshold_of_q=_rule(small_rule) if small_rule else default_small_threshold_rule,
            fallback=fallback,
        )
        result = find_mono_odd_cycle(colouring, params)
    elif method == "proposition":
        result = proposition_pipeline(colouring, delta)
    else:
        result = _run_method(colouring, "oracle", spec)
    _write_certificate(result, out_cert)
    with open(trace, "w") as fh:
        fh.write(result.trace.to_json_lines())
    cert = result.certificate
    click.echo(
        f"found colour-{cert.colour} odd cycle of length {cert.length} "
        f"(claimed bound {result.bound_claimed})"
    )


def _rule(expr):
    def rule(q):
        try:
            return int(eval(expr, {"__builtins__": {}}, {"q": q}))
        except Exception as exc:
            raise InputError(f"bad rule expression {expr!r}: {exc}") from None

    return rule


@main.command()
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--cert", type=click.Path(exists=True, dir_okay=False), required=True)
@_guarded
def verify(infile, cert):
    """Verify a certificate file against a colouring file."""
    colouring = read_colouring(infile)
    certificate = _read_certificate(cert)
    violation = verify_mono_odd_cycle(colouring, certificate)
    if violation is None:
        click.echo("ok")
        return
    click.echo(f"violation: {violation}", err=True)
    sys.exit(1)


@main.command("peel")
@click.option("--in", "infile", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--colour", type=int, required=True)
@click.option("--k", type=int, required=True)
@_guarded
def peel_cmd(infile, colour, k):
    """Peel one colour class and self-check the outcome."""
    colouring = read_colouring(infile)
    g = colour_class(colouring, colour)
    outcome = peel(g, k)
    violation = verify_peel(g, k, outcome)
    if isinstance(outcome, ShortCycle):
        verts = " ".join(str(v) for v in outcome.cycle.vertices)
        click.echo(f"short odd cycle of length {outcome.cycle.length}: {verts}")
    else:
        sizes = sorted((len(c.vertices) for c in outcome.components), reverse=True)
        click.echo(
            f"decomposition: removed {len(outcome.removed)} vertices, "
            f"{len(outcome.components)} components (largest {sizes[0] if sizes else 0})"
        )
    if violation is not None:
        click.echo(f"violation: {violation}", err=True)
        sys.exit(1)


@main.command("lq-exact")
@click.option("--q", "q", type=int, required=True)
@click.option("--n", type=int, required=True)
@_guarded
def lq_exact(q, n):
    """Exact worst-colouring bound for small q, n, by enumeration."""
    value, witness = exhaustive_L(q, n)
    if value is None:
        click.echo(
            f"L({q},{n}) = none: K_{n} admits a {q}-colouring with every "
            "colour class bipartite"
        )
    else:
        click.echo(f"L({q},{n}) = {value}")
    counts = [int((witness.table == i).sum() // 2) for i in range(q)]
    click.echo(f"witness colour class sizes: {counts}")


@main.command()
@click.option("--q", "q", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--iters", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_guarded
def search(q, n, iters, seed, out):
    """Simulated-annealing search for colourings with long shortest cycles."""
    objective, best = anneal_search(q, n, iters, seed)
    write_colouring(best, out)
    if objective == n + 1:
        click.echo(f"objective {objective} (no monochromatic odd cycle); wrote {out}")
    else:
        click.echo(f"objective {objective}; wrote {out}")


@main.command()
@click.option("--config", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_guarded
def table(config, out):
    """Run an experiment grid from a JSON config and write CSV."""
    with open(config) as fh:
        cfg = json.load(fh)
    rows = experiment_table(cfg)
    with open(out, "w") as fh:
        fh.write(rows_to_csv(rows))
    click.echo(f"wrote {len(rows)} rows to {out}")


if __name__ == "__main__":
    main()
