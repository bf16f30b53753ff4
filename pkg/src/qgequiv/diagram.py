"""Static SVG Minkowski diagram of a scenario in both representations.

The S frame (x, ct) is drawn orthogonally with ct pointing up. The QG frame
(x', ct') is drawn at angle theta, its unit ticks spaced gamma apart. A QG
event at x' sits on the x'-axis a distance gamma*x' from the origin, which is
the S point (eta x', beta eta x').
"""

from __future__ import annotations

import math

from .scenario import Role, Scenario, plan_flags

SIZE = 600
MARGIN = 50

STYLE = """\
<style>
.axis{stroke:#000;stroke-width:1.5}
.qgaxis{stroke:#b03030;stroke-width:1.5}
.cone{stroke:#999;stroke-width:1;stroke-dasharray:4 4}
.hyper{stroke:#2a7;stroke-width:1;fill:none}
.flag{stroke:#e08000;stroke-width:2}
.proj{stroke:#555;stroke-width:1;stroke-dasharray:2 3}
.tick{stroke:#000;stroke-width:1}
.qgtick{stroke:#b03030;stroke-width:1}
.sev{fill:#1f4e9c}
.qgev{fill:#fff;stroke:#b03030;stroke-width:2}
text{font-family:sans-serif;font-size:12px}
</style>"""


def _f(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


class _Canvas:
    def __init__(self, lo_x: float, lo_ct: float, span: float):
        self.lo_x, self.lo_ct = lo_x, lo_ct
        self.scale = (SIZE - 2 * MARGIN) / span
        self.items: list[str] = []

    def px(self, x: float, ct: float) -> tuple[str, str]:
        return (
            _f(MARGIN + (x - self.lo_x) * self.scale),
            _f(SIZE - MARGIN - (ct - self.lo_ct) * self.scale),
        )

    def line(self, a, b, cls: str):
        (x1, y1), (x2, y2) = self.px(*a), self.px(*b)
        self.items.append(f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')

    def circle(self, p, r: float, cls: str):
        cx, cy = self.px(*p)
        self.items.append(f'<circle class="{cls}" cx="{cx}" cy="{cy}" r="{_f(r)}"/>')

    def text(self, p, label: str, dx: float = 6, dy: float = -6, fill: str | None = None):
        x, y = self.px(*p)
        style = f' fill="{fill}"' if fill else ""
        self.items.append(
            f'<text x="{_f(float(x) + dx)}" y="{_f(float(y) + dy)}"{style}>{_escape(label)}</text>'
        )

    def polyline(self, pts, cls: str):
        coords = " ".join(",".join(self.px(*p)) for p in pts)
        self.items.append(f'<polyline class="{cls}" points="{coords}"/>')


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def emit_diagram(sc: Scenario) -> bytes:
    s = sc.strength
    s_pts = {e.id: e.s_event(s) for e in sc.events}
    qg_pts = {}
    for e in sc.events:
        xp = e.qg(s).x_prime
        qg_pts[e.id] = (s.eta * xp, s.beta * s.eta * xp)

    xs = [0.0, 1.0] + [p.x for p in s_pts.values()] + [p[0] for p in qg_pts.values()]
    cts = [0.0, 1.0] + [p.ct for p in s_pts.values()] + [p[1] for p in qg_pts.values()]
    lo_x, hi_x = min(xs) - 1.0, max(xs) + 1.0
    lo_ct, hi_ct = min(cts) - 1.0, max(cts) + 1.0
    span = max(hi_x - lo_x, hi_ct - lo_ct)
    hi_x, hi_ct = lo_x + span, lo_ct + span
    cv = _Canvas(lo_x, lo_ct, span)

    # light cone through the coordinator
    r = max(abs(lo_x), abs(hi_x), abs(lo_ct), abs(hi_ct))
    for sign, (a, b) in (
        (1.0, (max(lo_x, lo_ct), min(hi_x, hi_ct))),
        (-1.0, (max(lo_x, -hi_ct), min(hi_x, -lo_ct))),
    ):
        if a < b:
            cv.line((a, sign * a), (b, sign * b), "cone")

    # unit calibration hyperbola x^2 - ct^2 = 1, right branch
    hyper = []
    for k in range(41):
        ct = lo_ct + span * k / 40
        x = math.sqrt(1.0 + ct * ct)
        if x <= hi_x:
            hyper.append((x, ct))
    if len(hyper) > 1:
        cv.polyline(hyper, "hyper")

    # S axes and integer ticks
    cv.line((lo_x, 0.0), (hi_x, 0.0), "axis")
    cv.line((0.0, lo_ct), (0.0, hi_ct), "axis")
    cv.text((hi_x, 0.0), "x", dx=-14, dy=-8)
    cv.text((0.0, hi_ct), "ct", dx=8, dy=14)
    tick = 0.08
    for k in range(math.ceil(lo_x), math.floor(hi_x) + 1):
        if k:
            cv.line((k, -tick), (k, tick), "tick")
    for k in range(math.ceil(lo_ct), math.floor(hi_ct) + 1):
        if k:
            cv.line((-tick, k), (tick, k), "tick")

    # QG axes at angle theta, ticks every gamma
    th = math.radians(s.theta_deg)
    ux = (math.cos(th), math.sin(th))
    uct = (math.sin(th), math.cos(th))
    reach = r * math.sqrt(2.0)
    cv.line((-reach * ux[0], -reach * ux[1]), (reach * ux[0], reach * ux[1]), "qgaxis")
    cv.line((-reach * uct[0], -reach * uct[1]), (reach * uct[0], reach * uct[1]), "qgaxis")
    end = min(hi_x / ux[0], reach)
    cv.text((end * ux[0], end * ux[1]), "x'", dx=-18, dy=14, fill="#b03030")
    end = min(hi_ct / uct[1], reach)
    cv.text((end * uct[0], end * uct[1]), "ct'", dx=-24, dy=14, fill="#b03030")
    n = int(reach / s.gamma)
    for k in range(-n, n + 1):
        if not k:
            continue
        d = k * s.gamma
        for u, n_dir in ((ux, (-uct[0], uct[1])), (uct, (uct[1], -uct[0]))):
            px, py = d * u[0], d * u[1]
            if lo_x <= px <= hi_x and lo_ct <= py <= hi_ct:
                cv.line((px - tick * n_dir[0], py - tick * n_dir[1]),
                        (px + tick * n_dir[0], py + tick * n_dir[1]), "qgtick")

    # lightlines from the coordinator to connected parties
    plan = plan_flags(sc)
    for f in plan.s_flags:
        if f.connected:
            p = s_pts[f.party]
            cv.line((0.0, 0.0), (p.x, p.ct), "flag")
            cv.text((p.x / 2, p.ct / 2), f.label, dx=-26, dy=0, fill="#e08000")

    # events: filled = S representation, open = QG representation
    for e in sc.events:
        sp, qp = s_pts[e.id], qg_pts[e.id]
        if (sp.x, sp.ct) != qp:
            cv.line((sp.x, sp.ct), qp, "proj")
    for e in sc.events:
        sp, qp = s_pts[e.id], qg_pts[e.id]
        cv.circle(qp, 6, "qgev")
        cv.circle((sp.x, sp.ct), 4, "sev")
        cv.text((sp.x, sp.ct), e.id)
        if e.role is not Role.COORDINATOR and (sp.x, sp.ct) != qp:
            cv.text(qp, f"{e.id}'", dx=6, dy=16, fill="#b03030")

    caption = (
        f"beta={s.beta:.6g}  theta={s.theta_deg:.4f} deg  eta={s.eta:.6g}  gamma={s.gamma:.6g}  "
        f"flags S={plan.s_connected} QG={plan.qg_connected}"
    )
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">'
    )
    body = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        head,
        STYLE,
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#fff"/>',
        *cv.items,
        f'<text x="{MARGIN}" y="{MARGIN // 2}">{_escape(caption)}</text>',
        "</svg>",
    ]
    return ("\n".join(body) + "\n").encode("utf-8")
