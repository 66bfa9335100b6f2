"""Audit harness: cross-check the linear passes against the exact oracles.

For every instance the harness checks three layers:

  (a) validity: the emitted Steiner dominating set contains every leaf,
      spans the tree, and dominates it;
  (b) minimum-domination agreement: the forest pass matches the
      independent dynamic program on both the core forest and the whole
      instance, and the enumeration oracle where its cap allows;
  (c) the headline size: construction size (= leaf count + core
      domination number) versus the exact Steiner domination number.

Layer (c) is the interesting one.  The construction can lose; every
instance where the oracle finds a strictly smaller set becomes a
DiscrepancyCertificate, written as a .par file plus a JSON sidecar that
re-validates from the files alone.  Discrepancies are findings, not
failures: the run exits 0 when clean, 2 when certificates were written,
and 1 only on genuine internal errors such as a validity break or the
impossible case of the construction beating the verified optimum.

Instances are processed sequentially in a deterministic order, so a rerun
with the same arguments reproduces the report byte for byte.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .corpus import FIXTURES, GeneratorSpec, enumerate_parent_arrays, gen
from .forest_domination import forest_domination
from .oracles import (
    DEFAULT_CAPS,
    OracleCaps,
    domination_number_dp,
    is_dominating_set,
    is_steiner_set,
    min_dominating_set,
    min_steiner_dominating_set,
)
from .steiner_domination import steiner_domination
from .tree_model import (
    ParentArray,
    ValidationError,
    build_adjacency,
    format_parent_file,
    parse_parent_file,
)

AUDIT_FIXTURE = "theorem1-audit-8"
EXHAUSTIVE_MAX_N = 10


@dataclass(frozen=True)
class WitnessChecks:
    """Outcome of re-running both definitions against the oracle witness."""

    steiner: bool
    dominating: bool


@dataclass(frozen=True)
class DiscrepancyCertificate:
    """Proof that the construction overshoots on one instance.

    Carries the instance, both sizes, and a witness set strictly smaller
    than the construction's output that passed both definitional checks.
    Construction refuses inconsistent contents, so an in-memory
    certificate is always self-consistent.
    """

    instance: ParentArray
    algorithm_size: int
    oracle_size: int
    oracle_witness: tuple[int, ...]
    checks: WitnessChecks

    def __post_init__(self) -> None:
        if not self.oracle_size < self.algorithm_size:
            raise ValidationError(
                f"certificate needs oracle_size < algorithm_size, got "
                f"{self.oracle_size} vs {self.algorithm_size}"
            )
        if len(self.oracle_witness) != self.oracle_size:
            raise ValidationError(
                f"witness has {len(self.oracle_witness)} vertices, "
                f"claimed size {self.oracle_size}"
            )
        if not (self.checks.steiner and self.checks.dominating):
            raise ValidationError("certificate witness failed a definitional check")


def make_certificate(
    parents: ParentArray,
    algorithm_size: int,
    oracle_size: int,
    oracle_witness: tuple[int, ...],
) -> DiscrepancyCertificate:
    """Build a certificate, re-running both witness checks right now."""
    t = build_adjacency(parents)
    checks = WitnessChecks(
        steiner=is_steiner_set(t, oracle_witness),
        dominating=is_dominating_set(t, oracle_witness),
    )
    return DiscrepancyCertificate(
        instance=parents,
        algorithm_size=algorithm_size,
        oracle_size=oracle_size,
        oracle_witness=tuple(oracle_witness),
        checks=checks,
    )


def _certificate_json(cert: DiscrepancyCertificate) -> str:
    payload = {
        "n": cert.instance.n,
        "instance": list(cert.instance.parent),
        "algorithm_size": cert.algorithm_size,
        "oracle_size": cert.oracle_size,
        "oracle_witness": list(cert.oracle_witness),
        "checks": {
            "steiner": cert.checks.steiner,
            "dominating": cert.checks.dominating,
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_certificate(
    cert: DiscrepancyCertificate, cert_dir: str | Path, stem: str
) -> tuple[Path, Path]:
    """Write <stem>.par and <stem>.json under cert_dir, creating it."""
    directory = Path(cert_dir)
    directory.mkdir(parents=True, exist_ok=True)
    par_path = directory / f"{stem}.par"
    json_path = directory / f"{stem}.json"
    par_path.write_text(format_parent_file(cert.instance))
    json_path.write_text(_certificate_json(cert))
    return par_path, json_path


def revalidate_certificate(
    par_path: str | Path,
    json_path: str | Path,
    caps: OracleCaps = DEFAULT_CAPS,
) -> DiscrepancyCertificate:
    """Re-derive a certificate from its files alone.

    Recomputes the construction side, re-runs both witness checks, and,
    when the instance is small enough for the enumeration oracle, confirms
    the claimed oracle size really is the minimum.  Raises ValidationError
    on any mismatch with the sidecar.
    """
    parents = parse_parent_file(Path(par_path).read_text())
    data = json.loads(Path(json_path).read_text())
    if data["n"] != parents.n or tuple(data["instance"]) != parents.parent:
        raise ValidationError("sidecar instance does not match the .par file")
    algorithm_size = steiner_domination(parents).size
    if algorithm_size != data["algorithm_size"]:
        raise ValidationError(
            f"recomputed construction size {algorithm_size} != recorded "
            f"{data['algorithm_size']}"
        )
    witness = tuple(data["oracle_witness"])
    cert = make_certificate(parents, algorithm_size, data["oracle_size"], witness)
    if parents.n <= caps.steiner_dominating:
        exact, _ = min_steiner_dominating_set(build_adjacency(parents), caps=caps)
    elif parents.n <= caps.steiner_dominating_pruned:
        exact, _ = min_steiner_dominating_set(
            build_adjacency(parents), prune=True, caps=caps
        )
    else:
        return cert
    if exact != cert.oracle_size:
        raise ValidationError(
            f"recorded oracle size {cert.oracle_size} but enumeration finds {exact}"
        )
    return cert


@dataclass(frozen=True)
class InstanceAudit:
    """All per-instance audit outcomes, pass/fail per layer."""

    parents: ParentArray
    algorithm_size: int
    oracle_size: int | None  # None when the instance exceeds every oracle cap
    validity_ok: bool
    optimality_ok: bool
    certificate: DiscrepancyCertificate | None
    internal_error: str | None


def audit_instance(parents: ParentArray, caps: OracleCaps = DEFAULT_CAPS) -> InstanceAudit:
    """Run all three audit layers on a single tree."""
    t = build_adjacency(parents)
    res = steiner_domination(parents)
    sd = res.steiner_dominating_set

    validity_ok = (
        set(res.leaves) <= set(sd)
        and is_steiner_set(t, sd)
        and is_dominating_set(t, sd)
        and res.size == len(sd) == res.formula_value
    )

    core_adj = build_adjacency(res.core.parents)
    core_local = forest_domination(res.core.parents)
    optimality_ok = len(core_local) == domination_number_dp(core_adj)
    if optimality_ok and res.core.m <= caps.dominating:
        optimality_ok = (
            len(core_local) == min_dominating_set(core_adj, caps)[0]
            and (res.core.m == 0 or is_dominating_set(core_adj, core_local))
        )
    whole = forest_domination(parents)
    if optimality_ok:
        optimality_ok = (
            len(whole) == domination_number_dp(t)
            and is_dominating_set(t, whole)
        )
    if optimality_ok and parents.n <= caps.dominating:
        optimality_ok = len(whole) == min_dominating_set(t, caps)[0]

    oracle_size: int | None = None
    witness: tuple[int, ...] = ()
    certificate: DiscrepancyCertificate | None = None
    internal_error: str | None = None
    if parents.n <= caps.steiner_dominating:
        oracle_size, witness = min_steiner_dominating_set(t, caps=caps)
    elif parents.n <= caps.steiner_dominating_pruned:
        oracle_size, witness = min_steiner_dominating_set(t, prune=True, caps=caps)
    if oracle_size is not None:
        if oracle_size < res.size:
            certificate = make_certificate(parents, res.size, oracle_size, witness)
        elif oracle_size > res.size:
            # sd itself is a valid candidate of this size, so the
            # enumeration finding anything larger means an oracle bug
            internal_error = (
                f"construction size {res.size} beats enumeration minimum "
                f"{oracle_size} on {list(parents.parent)}"
            )
    return InstanceAudit(
        parents=parents,
        algorithm_size=res.size,
        oracle_size=oracle_size,
        validity_ok=validity_ok,
        optimality_ok=optimality_ok,
        certificate=certificate,
        internal_error=internal_error,
    )


@dataclass(frozen=True)
class VerifyReport:
    mode: str
    max_n: int
    count: int
    seed: int
    instances: int
    oracle_checked: int
    validity_failures: int
    optimality_failures: int
    internal_errors: tuple[str, ...]
    certificates: tuple[DiscrepancyCertificate, ...]
    certificate_files: tuple[str, ...]
    fixture_name: str
    fixture_algorithm_size: int
    fixture_oracle_size: int
    fixture_outcome: str  # "certificate" or "clean"
    exit_code: int

    def to_json_text(self) -> str:
        payload = {
            "mode": self.mode,
            "max_n": self.max_n,
            "count": self.count,
            "seed": self.seed,
            "instances": self.instances,
            "oracle_checked": self.oracle_checked,
            "validity_failures": self.validity_failures,
            "optimality_failures": self.optimality_failures,
            "internal_errors": list(self.internal_errors),
            "discrepancies": len(self.certificates),
            "certificates": [
                {
                    "file": stem,
                    "n": cert.instance.n,
                    "instance": list(cert.instance.parent),
                    "algorithm_size": cert.algorithm_size,
                    "oracle_size": cert.oracle_size,
                }
                for stem, cert in zip(self.certificate_files, self.certificates)
            ],
            "fixture": {
                "name": self.fixture_name,
                "algorithm_size": self.fixture_algorithm_size,
                "oracle_size": self.fixture_oracle_size,
                "outcome": self.fixture_outcome,
            },
            "exit_code": self.exit_code,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _instance_stream(mode, max_n, count, seed):
    if mode == "exhaustive":
        for n in range(2, max_n + 1):
            yield from enumerate_parent_arrays(n, "trees")
    else:
        rng = random.Random(seed)
        for _ in range(count):
            n = rng.randint(2, max_n)
            yield gen(GeneratorSpec("prufer", n=n, seed=rng.getrandbits(64)))


def run_verify(
    mode: str,
    max_n: int,
    count: int = 0,
    seed: int = 0,
    report_path: str | Path | None = None,
    cert_dir: str | Path | None = None,
    caps: OracleCaps = DEFAULT_CAPS,
) -> VerifyReport:
    """Audit a corpus and the named fixture; optionally write files.

    exhaustive mode walks every tree parent array with 2 <= n <= max_n
    (max_n <= 10); random mode draws ``count`` uniform random trees with n
    in [2, max_n], max_n within the pruned oracle cap.  Certificates are
    written under cert_dir when given; the report JSON is written to
    report_path when given.  The returned report always carries the
    certificates in memory.
    """
    if mode not in ("exhaustive", "random"):
        raise ValidationError(f"mode must be 'exhaustive' or 'random', got {mode!r}")
    if mode == "exhaustive":
        if not 2 <= max_n <= EXHAUSTIVE_MAX_N:
            raise ValidationError(
                f"exhaustive mode needs 2 <= max_n <= {EXHAUSTIVE_MAX_N}, got {max_n}"
            )
        count = 0  # exhaustive runs ignore the sample count
    else:
        if not 2 <= max_n <= caps.steiner_dominating_pruned:
            raise ValidationError(
                f"random mode needs 2 <= max_n <= {caps.steiner_dominating_pruned} "
                f"(the pruned oracle cap), got {max_n}"
            )
        if count < 1:
            raise ValidationError(f"random mode needs count >= 1, got {count}")
    fixture_n = FIXTURES[AUDIT_FIXTURE].n
    if caps.steiner_dominating < fixture_n:
        raise ValidationError(
            f"caps must allow the unpruned oracle through n={fixture_n} "
            f"so the audit fixture can be decided"
        )

    instances = 0
    oracle_checked = 0
    validity_failures = 0
    optimality_failures = 0
    internal_errors: list[str] = []
    certificates: list[DiscrepancyCertificate] = []
    certificate_files: list[str] = []

    def record(audit: InstanceAudit, stem: str | None = None) -> None:
        nonlocal oracle_checked, validity_failures, optimality_failures
        if audit.oracle_size is not None:
            oracle_checked += 1
        if not audit.validity_ok:
            validity_failures += 1
        if not audit.optimality_ok:
            optimality_failures += 1
        if audit.internal_error is not None:
            internal_errors.append(audit.internal_error)
        if audit.certificate is not None:
            if stem is None:
                stem = f"discrepancy-{len(certificates):05d}"
            certificates.append(audit.certificate)
            certificate_files.append(stem)
            if cert_dir is not None:
                write_certificate(audit.certificate, cert_dir, stem)

    for parents in _instance_stream(mode, max_n, count, seed):
        instances += 1
        record(audit_instance(parents, caps))

    fixture_audit = audit_instance(FIXTURES[AUDIT_FIXTURE], caps)
    record(fixture_audit, stem=AUDIT_FIXTURE)
    assert fixture_audit.oracle_size is not None  # guaranteed by the caps check
    fixture_outcome = "certificate" if fixture_audit.certificate else "clean"

    exit_code = 0
    if certificates:
        exit_code = 2
    if validity_failures or optimality_failures or internal_errors:
        exit_code = 1

    report = VerifyReport(
        mode=mode,
        max_n=max_n,
        count=count,
        seed=seed,
        instances=instances,
        oracle_checked=oracle_checked,
        validity_failures=validity_failures,
        optimality_failures=optimality_failures,
        internal_errors=tuple(internal_errors),
        certificates=tuple(certificates),
        certificate_files=tuple(certificate_files),
        fixture_name=AUDIT_FIXTURE,
        fixture_algorithm_size=fixture_audit.algorithm_size,
        fixture_oracle_size=fixture_audit.oracle_size,
        fixture_outcome=fixture_outcome,
        exit_code=exit_code,
    )
    if report_path is not None:
        path = Path(report_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.to_json_text())
    return report
