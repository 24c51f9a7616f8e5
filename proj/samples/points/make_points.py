"""Regenerate the sample point files (Klein disk coordinates)."""
import math
import random
from pathlib import Path

HERE = Path(__file__).parent
rng = random.Random(2026)


def klein(r, a):
    return [math.tanh(r) * math.cos(a), math.tanh(r) * math.sin(a)]


def stretch(p, factor):
    # Fermi coordinates about the u-axis: the geodesic distance along it is
    # multiplied by `factor`, the distance to it is kept.
    u, v = p
    x0 = 1 / math.sqrt(1 - u * u - v * v)
    x1, x2 = u * x0, v * x0
    a, b = math.atanh(x1 / x0), math.asinh(x2)
    a *= factor
    y0, y1, y2 = math.cosh(a) * math.cosh(b), math.sinh(a) * math.cosh(b), math.sinh(b)
    return [y1 / y0, y2 / y0]


def write(name, pts):
    rows = ",\n".join(f"  [{u!r}, {v!r}]" for u, v in pts)
    (HERE / name).write_text('{"points": [\n' + rows + "\n]}\n")


tight = [klein(0.2 * (1 - 0.06 * rng.random()), 2 * math.pi * k / 12 + 0.2 * rng.random()) for k in range(12)]
write("tight_cloud.json", tight)
write("elongated_cloud.json", [stretch(p, 40) for p in tight])
write("circle16.json", [klein(0.6, 2 * math.pi * k / 16) for k in range(16)])
write("cloud8.json", [klein(0.8 * math.sqrt(rng.random()), 2 * math.pi * rng.random()) for _ in range(8)])
write("two_points.json", [klein(0.6, 0.0), klein(0.6, 0.4)])
