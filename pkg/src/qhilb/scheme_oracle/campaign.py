"""Run the exact-rank oracle against the predicted h^1 over an instance stream."""
import json
from concurrent.futures import ProcessPoolExecutor

from ..errors import DisjointnessViolation
from .instances import SCHEMA_VERSION, InstanceSpec
from .scheme import cohomology, in_bn_range


def verify_instance(inst, mn_pairs):
    """Reports for one instance over the given twists, as plain dicts."""
    Z = inst.build()
    reports = []
    for m, n in mn_pairs:
        if not in_bn_range(Z.length, m, n):
            continue
        try:
            rep = cohomology(Z, m, n).as_dict()
        except DisjointnessViolation as exc:
            rep = {"l": Z.length, "m": m, "n": n, "error": str(exc), "agrees": False}
        reports.append(rep)
    return reports


def _job(args):
    index, payload, mn_pairs = args
    inst = InstanceSpec.from_json(payload)
    return index, verify_instance(inst, mn_pairs)


def run_campaign(instances, pairs_for_length, jobs=1):
    """Yield ``(index, instance, reports)`` in instance order, whatever ``jobs`` is.

    ``pairs_for_length(l)`` lists the twists to check for a scheme of length l.
    """
    instances = list(instances)
    work = [(i, inst.to_json(), pairs_for_length(inst.length)) for i, inst in enumerate(instances)]
    if jobs <= 1:
        results = map(_job, work)
        for index, reports in results:
            yield index, instances[index], reports
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for index, reports in pool.map(_job, work, chunksize=8):
            yield index, instances[index], reports


def report_lines(index, inst, reports):
    for rep in reports:
        rec = {"schema": SCHEMA_VERSION, "instance": index, "kind": inst.kind}
        rec.update(rep)
        yield json.dumps(rec, sort_keys=True)


def summarize(total, agreements, instances):
    mismatches = total - agreements
    return {
        "schema": SCHEMA_VERSION,
        "summary": {
            "instances": instances,
            "total": total,
            "agreements": agreements,
            "mismatches": mismatches,
        },
    }
