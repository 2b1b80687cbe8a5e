"""Minimal static SVG diagrams: charge rays, the domain K, and cell scans."""

from __future__ import annotations

import math
from typing import Iterable, List, Sequence, Tuple

from .moduli import Region

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]


def _esc(text):
    return str(text).replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


class Canvas:
    """Collects primitives in data coordinates; ``render`` fits them to a box."""

    def __init__(self, width=480, height=480, pad=30):
        self.width = width
        self.height = height
        self.pad = pad
        self.items = []
        self.xmin = self.ymin = math.inf
        self.xmax = self.ymax = -math.inf

    def _see(self, x, y):
        self.xmin = min(self.xmin, x)
        self.xmax = max(self.xmax, x)
        self.ymin = min(self.ymin, y)
        self.ymax = max(self.ymax, y)

    def line(self, points, color="#000000", width=1.0, dash=None):
        points = list(points)
        for x, y in points:
            self._see(x, y)
        self.items.append(("line", points, color, width, dash))

    def polygon(self, points, fill="#dddddd"):
        points = list(points)
        for x, y in points:
            self._see(x, y)
        self.items.append(("polygon", points, fill))

    def dot(self, x, y, color="#000000", r=2.0):
        self._see(x, y)
        self.items.append(("dot", (x, y), color, r))

    def text(self, x, y, label, color="#000000"):
        self._see(x, y)
        self.items.append(("text", (x, y), label, color))

    def render(self, title=""):
        w, h, pad = self.width, self.height, self.pad
        dx = (self.xmax - self.xmin) or 1.0
        dy = (self.ymax - self.ymin) or 1.0
        scale = min((w - 2 * pad) / dx, (h - 2 * pad) / dy)

        def tr(x, y):
            return pad + (x - self.xmin) * scale, h - pad - (y - self.ymin) * scale

        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
            f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>',
        ]
        if title:
            out.append(f'<title>{_esc(title)}</title>')
        for item in self.items:
            kind = item[0]
            if kind == "line":
                _, pts, color, width, dash = item
                coords = " ".join("%.3f,%.3f" % tr(x, y) for x, y in pts)
                extra = f' stroke-dasharray="{dash}"' if dash else ""
                out.append(
                    f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="{width}"{extra}/>'
                )
            elif kind == "polygon":
                _, pts, fill = item
                coords = " ".join("%.3f,%.3f" % tr(x, y) for x, y in pts)
                out.append(f'<polygon points="{coords}" fill="{fill}" stroke="none"/>')
            elif kind == "dot":
                _, (x, y), color, r = item
                cx, cy = tr(x, y)
                out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{r}" fill="{color}"/>')
            else:
                _, (x, y), label, color = item
                cx, cy = tr(x, y)
                out.append(
                    f'<text x="{cx:.3f}" y="{cy:.3f}" font-size="11" font-family="sans-serif" fill="{color}">{_esc(label)}</text>'
                )
        out.append("</svg>")
        return "\n".join(out) + "\n"


def rays_svg(sc, filtration=None) -> str:
    """Central charges of ``O(i)``, ``O(i-1)[1]``, ``O_x`` and any HN pieces as rays from 0."""
    c = Canvas()
    c.dot(0.0, 0.0)
    rays = [
        (f"O({sc.i})", sc.z_alpha, "#444444"),
        (f"O({sc.i - 1})[1]", sc.z_beta, "#444444"),
        ("O_x", sc.z_point, "#888888"),
    ]
    if filtration is not None:
        for k, piece in enumerate(filtration):
            rays.append((f"{piece.piece} @ {piece.phase:.4f}", piece.charge, _PALETTE[k % len(_PALETTE)]))
    for label, z, color in rays:
        c.line([(0.0, 0.0), (z.real, z.imag)], color=color, width=1.5)
        c.dot(z.real, z.imag, color=color)
        c.text(z.real, z.imag, label, color=color)
    return c.render(f"central charges, regime {sc.regime.value}")


def k_domain_svg(points: Iterable[Tuple[complex, Region]] = (), y_max=4.0, n=200) -> str:
    """The domain K with its glued boundary curves, the wall ``y = pi``, and sample points."""
    c = Canvas(width=520, height=480)
    ys = [(k / n) * (math.pi / 2) for k in range(1, n)]
    xs = [-math.log(math.cos(y)) for y in ys]
    x_edge = max(xs[-1], 3.0)
    right = [(min(x, x_edge), y) for x, y in zip(xs, ys)]
    left = [(-x, y) for x, y in reversed(right)]
    shade = [(0.0, 0.0)] + right + [(x_edge, math.pi / 2), (x_edge, y_max), (-x_edge, y_max), (-x_edge, math.pi / 2)] + left
    c.polygon(shade, fill="#e8eef7")
    c.line([(0.0, 0.0)] + right, color="#1f77b4", width=1.5)
    c.line([(0.0, 0.0)] + [(-x, y) for x, y in right], color="#1f77b4", width=1.5)
    c.line([(-x_edge, math.pi), (x_edge, math.pi)], color="#d62728", dash="4,3")
    c.text(x_edge * 0.6, math.pi + 0.08, "wall y = pi", color="#d62728")
    c.line([(-x_edge, 0.0), (x_edge, 0.0)], color="#999999", width=0.5)
    for w, region in points:
        if w.imag > y_max:
            continue
        color = "#2ca02c" if region is Region.INTERIOR else "#ff7f0e"
        c.dot(w.real, w.imag, color=color, r=1.5)
    return c.render("fundamental domain K")


def scan_svg(path: Sequence, params: Sequence[Tuple[float, float]]) -> str:
    """Trajectory of ``(phi(O(i)), phi(O(i-1)[1]))`` with cell changes marked."""
    c = Canvas()
    alphas = [a for a, _ in params]
    betas = [b for _, b in params]
    lo = min(alphas + betas) - 0.25
    hi = max(alphas + betas) + 0.25
    c.line([(lo, lo), (hi, hi)], color="#d62728", dash="4,3")
    c.text(hi - 0.3, hi, "alpha = beta", color="#d62728")
    c.line([(lo, lo + 1.0), (hi - 1.0, hi)], color="#999999", dash="2,2")
    c.line(list(zip(alphas, betas)), color="#1f77b4", width=1.5)
    prev = None
    colors = {}
    for (t, label), (a, b) in zip(path, params):
        key = str(label)
        if key not in colors:
            colors[key] = _PALETTE[len(colors) % len(_PALETTE)]
        c.dot(a, b, color=colors[key], r=2.0)
        if key != prev:
            c.text(a, b, key, color=colors[key])
        prev = key
    return c.render("cell scan")


def interpolated_params(sc_from, sc_to, ts: List[float]):
    a = sc_from.params()
    b = sc_to.params()
    return [(a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])) for t in ts]
