#!/usr/bin/env python3
"""External-solver adapter: solve an LP-format model with scipy's MILP
(HiGHS) and write a "name value" solution listing.

Usage: lp_solve.py MODEL.lp SOLUTION.txt

The solution file contains one "variable value" pair per line plus
"objective <v>" and "status <optimal|infeasible>" lines.
"""
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp


def parse_lp(path):
    sections = {"objective": [], "constraints": [], "bounds": [], "binary": []}
    section = None
    with open(path) as f:
        for raw in f:
            line = raw.strip()
            if not line or line.startswith("\\"):
                continue
            low = line.lower()
            if low == "maximize":
                section = "objective"
                continue
            if low == "subject to":
                section = "constraints"
                continue
            if low == "bounds":
                section = "bounds"
                continue
            if low == "binary":
                section = "binary"
                continue
            if low == "end":
                break
            sections[section].append(line)
    return sections


def parse_terms(tokens, var_index):
    coefs = {}
    sign, mag = 1.0, None
    for tok in tokens:
        if tok == "+":
            sign = 1.0
            continue
        if tok == "-":
            sign = -1.0
            continue
        try:
            mag = float(tok)
            continue
        except ValueError:
            pass
        idx = var_index.setdefault(tok, len(var_index))
        coefs[idx] = coefs.get(idx, 0.0) + sign * (1.0 if mag is None else mag)
        sign, mag = 1.0, None
    return coefs


def main():
    model_path, sol_path = sys.argv[1], sys.argv[2]
    sections = parse_lp(model_path)
    var_index = {}

    obj_tokens = []
    for line in sections["objective"]:
        if ":" in line:
            line = line.split(":", 1)[1]
        obj_tokens.extend(line.split())
    objective = parse_terms(obj_tokens, var_index)

    rows = []
    for line in sections["constraints"]:
        if ":" in line:
            line = line.split(":", 1)[1]
        toks = line.split()
        sense_pos = next(i for i, t in enumerate(toks) if t in ("<=", ">=", "="))
        coefs = parse_terms(toks[:sense_pos], var_index)
        rhs = float(toks[sense_pos + 1])
        rows.append((coefs, toks[sense_pos], rhs))

    lo, hi, integrality = {}, {}, {}
    for line in sections["bounds"]:
        lb, _, name, _, ub = line.split()
        idx = var_index.setdefault(name, len(var_index))
        lo[idx], hi[idx] = float(lb), float(ub)
    for line in sections["binary"]:
        idx = var_index.setdefault(line.strip(), len(var_index))
        lo[idx], hi[idx], integrality[idx] = 0.0, 1.0, 1

    nvars = len(var_index)
    c = np.zeros(nvars)
    for idx, coef in objective.items():
        c[idx] = -coef  # milp minimizes
    a = np.zeros((len(rows), nvars))
    clb = np.full(len(rows), -np.inf)
    cub = np.full(len(rows), np.inf)
    for i, (coefs, sense, rhs) in enumerate(rows):
        for idx, coef in coefs.items():
            a[i, idx] = coef
        if sense in ("<=", "="):
            cub[i] = rhs
        if sense in (">=", "="):
            clb[i] = rhs

    bounds = Bounds(
        np.array([lo.get(i, 0.0) for i in range(nvars)]),
        np.array([hi.get(i, 1.0) for i in range(nvars)]),
    )
    integ = np.array([integrality.get(i, 0) for i in range(nvars)])
    res = milp(c=c, constraints=LinearConstraint(a, clb, cub), bounds=bounds,
               integrality=integ)

    with open(sol_path, "w") as out:
        if res.status == 2:
            out.write("status infeasible\n")
            return
        if not res.success:
            out.write("status failed\n")
            sys.exit(1)
        out.write("status optimal\n")
        out.write(f"objective {-res.fun:.9g}\n")
        names = sorted(var_index, key=var_index.get)
        for name, value in zip(names, res.x):
            out.write(f"{name} {value:.9g}\n")


if __name__ == "__main__":
    main()
