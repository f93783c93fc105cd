"""Scene to standalone SVG 1.1 bytes.

Output is byte-deterministic for equal scenes: fixed attribute order, fixed
float formatting (three decimals, trailing zeros stripped). Dash-animated
strokes get a declarative <animate> child cycling stroke-dashoffset, so the
stills animate in any SVG viewer without scripting.
"""

from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

from .scene import (
    CircleMark,
    Polygon,
    Polyline,
    Primitive,
    QuadraticCurve,
    RectMark,
    Scene,
    Style,
    TextMark,
)


def _num(value: float) -> str:
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _style_attrs(style: Style, default_fill: str = "none") -> str:
    parts = [f'fill="{style.fill if style.fill is not None else default_fill}"']
    if style.stroke is not None:
        parts.append(f'stroke="{style.stroke}"')
    if style.stroke_width is not None:
        parts.append(f'stroke-width="{_num(style.stroke_width)}"')
    if style.opacity is not None:
        parts.append(f'opacity="{_num(style.opacity)}"')
    if style.dash is not None:
        parts.append(f'stroke-dasharray="{" ".join(_num(d) for d in style.dash)}"')
    return " ".join(parts)


def _tag_attr(primitive: Primitive) -> str:
    return f" class={quoteattr(primitive.tag)}" if primitive.tag else ""


def _dash_animation(style: Style) -> str:
    if style.dash_cycle is None or style.dash is None:
        return ""
    cycle = sum(style.dash)
    return (
        f'<animate attributeName="stroke-dashoffset" from="0" to="-{_num(cycle)}" '
        f'dur="{_num(style.dash_cycle)}s" repeatCount="indefinite"/>'
    )


def _points(points) -> str:
    return " ".join(f"{_num(x)},{_num(y)}" for x, y in points)


def _emit(primitive: Primitive) -> str:
    tag = _tag_attr(primitive)
    if isinstance(primitive, Polyline):
        anim = _dash_animation(primitive.style)
        attrs = _style_attrs(primitive.style)
        body = f'<polyline points="{_points(primitive.points)}" {attrs}{tag}'
        return f"{body}>{anim}</polyline>" if anim else f"{body}/>"
    if isinstance(primitive, Polygon):
        return f'<polygon points="{_points(primitive.points)}" {_style_attrs(primitive.style)}{tag}/>'
    if isinstance(primitive, QuadraticCurve):
        (sx, sy), (cx, cy), (ex, ey) = primitive.start, primitive.control, primitive.end
        d = f"M {_num(sx)} {_num(sy)} Q {_num(cx)} {_num(cy)} {_num(ex)} {_num(ey)}"
        anim = _dash_animation(primitive.style)
        body = f'<path d="{d}" {_style_attrs(primitive.style)}{tag}'
        return f"{body}>{anim}</path>" if anim else f"{body}/>"
    if isinstance(primitive, CircleMark):
        (x, y) = primitive.center
        return (
            f'<circle cx="{_num(x)}" cy="{_num(y)}" r="{_num(primitive.radius)}" '
            f"{_style_attrs(primitive.style)}{tag}/>"
        )
    if isinstance(primitive, RectMark):
        return (
            f'<rect x="{_num(primitive.x)}" y="{_num(primitive.y)}" '
            f'width="{_num(primitive.width)}" height="{_num(primitive.height)}" '
            f"{_style_attrs(primitive.style)}{tag}/>"
        )
    if isinstance(primitive, TextMark):
        (x, y) = primitive.position
        return (
            f'<text x="{_num(x)}" y="{_num(y)}" font-size="{_num(primitive.size)}" '
            f'text-anchor="{primitive.anchor}" font-family="sans-serif" '
            f"{_style_attrs(primitive.style, default_fill='#000000')}{tag}>"
            f"{escape(primitive.content)}</text>"
        )
    raise TypeError(f"unknown primitive {type(primitive).__name__}")


def scene_to_svg(scene: Scene) -> bytes:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_num(scene.width)}" height="{_num(scene.height)}" '
            f'viewBox="0 0 {_num(scene.width)} {_num(scene.height)}">'
        ),
    ]
    lines.extend(f"  {_emit(p)}" for p in scene.primitives)
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
