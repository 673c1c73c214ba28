"""Drive the CLI through every artifact kind and check JSON round trips."""

import json
import os
import subprocess
import sys

from graded_forms.cli import dumps
from graded_forms.halfint import HalfIntForm, theta
from graded_forms.jacobilike import JacobiLikeForm
from graded_forms.modforms import ModularForm
from graded_forms.psido import PsiDO
from graded_forms.qseries import QSeries
from graded_forms.quasipoly import QuasiPolynomial

# (output name, argv, type of the emitted artifact)
STEPS = [
    ("e4", ["series", "--form", "E4", "--prec", "30"], ModularForm),
    ("e6", ["series", "--form", "E6", "--prec", "30"], ModularForm),
    ("delta", ["series", "--form", "Delta", "--prec", "30"], ModularForm),
    ("e2q", ["series", "--form", "E2poly", "--prec", "30"], QuasiPolynomial),
    ("theta", ["series", "--form", "theta", "--prec", "200"], HalfIntForm),
    ("qp4", ["lift", "xi", "--in", "{e4}", "--depth", "2"], QuasiPolynomial),
    ("qp6", ["lift", "derivative", "--in", "{e6}", "--depth", "2"], QuasiPolynomial),
    ("ck", ["lift", "ck", "--in", "{e6}", "--w", "1", "--delta", "1", "--K", "5"], JacobiLikeForm),
    ("xh", ["lift", "xihat", "--in", "{e4}", "--delta", "0", "--K", "5"], JacobiLikeForm),
    ("can", ["lift", "canonical", "--in", "{qp6}", "--delta", "0", "--K", "5"], JacobiLikeForm),
    ("tr", ["lift", "transfer", "--in", "{qp6}", "--depth", "1"], QuasiPolynomial),
    ("pi", ["lift", "pi", "--in", "{can}", "--depth", "2"], QuasiPolynomial),
    ("lieQ", ["bracket", "lieQ", "--in", "{qp4}", "--in2", "{qp6}"], QuasiPolynomial),
    ("lieX", ["bracket", "lieX", "--in", "{xh}", "--in2", "{can}", "--xi1", "2", "--xi2", "2"],
     JacobiLikeForm),
    ("rcJ", ["bracket", "rcJ", "--in", "{xh}", "--in2", "{can}", "--n", "1", "--mu1", "1/2",
             "--mu2", "1/2"], JacobiLikeForm),
    ("rcQP", ["bracket", "rcQP", "--in", "{qp4}", "--in2", "{qp6}", "--n", "1"], QuasiPolynomial),
    ("rcQPm", ["bracket", "rcQPm", "--in", "{qp4}", "--in2", "{qp6}", "--n", "0", "--depth", "1",
               "--closed"], QuasiPolynomial),
    ("heat", ["bracket", "heat", "--in", "{xh}", "--mu1", "4", "--times", "2"], JacobiLikeForm),
    ("psido", ["bracket", "psido", "--in", "{op1}", "--in2", "{op2}"], PsiDO),
    ("hm", ["hecke", "modular", "--in", "{delta}", "--prime", "2"], ModularForm),
    ("hq", ["hecke", "qp", "--in", "{qp6}", "--prime", "3"], QuasiPolynomial),
    ("hj", ["hecke", "jl", "--in", "{xh}", "--prime", "2"], JacobiLikeForm),
    ("shim", ["shimura", "--in", "{theta3}", "--prec-out", "12"], ModularForm),
]

CERTIFY = [("modular", "hm"), ("qp", "e2q"), ("qp", "lieQ"), ("qp", "rcQP"), ("jl", "rcJ"),
           ("jl", "heat"), ("jl", "hj")]


def run(argv, stdin=None):
    env = dict(os.environ)
    proc = subprocess.run([sys.executable, "-m", "graded_forms.cli", *argv], input=stdin,
                          capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout


def pipeline(workdir):
    """Run every step; return a list of failure messages (empty on success)."""
    failures = []
    th = theta(200)
    paths = {"theta3": os.path.join(workdir, "theta3.json")}
    with open(paths["theta3"], "w") as fh:
        fh.write(dumps(HalfIntForm(3, 4, th * th * th).to_json()))
    for name, off, shift in (("op1", 1, 0), ("op2", 2, 3)):
        ops = PsiDO(off, [QSeries([(i * i + shift) % 7 - 3 for i in range(12)]).derive(j) for j in range(5)])
        paths[name] = os.path.join(workdir, name + ".json")
        with open(paths[name], "w") as fh:
            fh.write(dumps(ops.to_json()))
    for name, argv, cls in STEPS:
        argv = [a.format(**paths) for a in argv]
        code, out = run(argv)
        if code != 0:
            failures.append(f"{name}: exit {code}: {out.strip()}")
            continue
        code2, out2 = run(argv)
        if out2 != out:
            failures.append(f"{name}: output not deterministic")
        obj = cls.from_json(json.loads(out))
        if dumps(obj.to_json()) != out:
            failures.append(f"{name}: re-serialization differs")
        path = os.path.join(workdir, name + ".json")
        with open(path, "w") as fh:
            fh.write(out)
        paths[name] = path
    for kind, name in CERTIFY:
        if name not in paths:
            continue
        code, out = run(["certify", "--kind", kind, "--in", paths[name]])
        if code != 0 or not json.loads(out)["ok"]:
            failures.append(f"certify {kind} {name} failed")
    if "theta" in paths:
        code, out = run(["shintani", "--in", "-", "--lam", "3/2", "--m", "1", "--mprime", "2",
                         "--r", "1"], stdin=dumps(QSeries([1, 2, 3]).to_json()))
        if code != 0 or dumps(QuasiPolynomial.from_json(json.loads(out)).to_json()) != out:
            failures.append("shintani failed")
    return failures
