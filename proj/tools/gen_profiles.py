#!/usr/bin/env python3
"""Regenerate the profile JSON files under data/."""
import json
import os
import sys

root = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def dump(name, obj):
    with open(os.path.join(root, name), "w") as f:
        json.dump(obj, f, indent=1, sort_keys=True)
        f.write("\n")


def reference(points=1001):
    r, h1, h2 = [], [], []
    for i in range(points):
        x = i / (points - 1)
        if x <= 0.5:
            s = x
        elif x < 0.9:
            u = (x - 0.5) / 0.4
            s = 0.5 + 0.4 * (u - u**3 + 0.5 * u**4)
        else:
            s = 0.7
        r.append(x)
        h1.append(2.0 - s * s)
        h2.append(s * s)
    return {"r": r, "h1": h1, "h2": h2, "collar": 0.1}


def grid(lo, hi, n):
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def smoothstep_drop(r0, r1):
    rs = grid(0.0, 4.0, 401)
    f = []
    for x in rs:
        t = min(max((x - r0) / (r1 - r0), 0.0), 1.0)
        f.append(1.0 - t * t * (3.0 - 2.0 * t))
    return {"r": rs, "f": f, "r0": r0, "r1": r1, "epsilon": 0.2}


def linear_drop(r0, r1, start, width):
    rs = grid(0.0, 4.0, 401)
    f = [1.0 - min(max((x - start) / width, 0.0), 1.0) for x in rs]
    return {"r": rs, "f": f, "r0": r0, "r1": r1, "epsilon": 0.2}


def main():
    dump("reference_binding_profile.json", reference())
    rs = grid(0.0, 1.0, 201)
    dump("examples/proportional_binding_profile.json",
         {"r": rs, "h1": [1 + x * x for x in rs], "h2": [2 + 2 * x * x for x in rs]})
    dump("examples/deformation_smoothstep.json", smoothstep_drop(1.0, 3.0))
    dump("examples/deformation_linear.json", linear_drop(1.0, 3.0, 1.5, 1.0))
    return 0


if __name__ == "__main__":
    sys.exit(main())
