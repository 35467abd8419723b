import re
import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest

from chaingeo.configurations import VerificationReport, build_ca, build_cb, verify_config
from chaingeo.qfield import qnum_to_float
from chaingeo.render import RenderOptions, render_report, render_svg

NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg.encode("utf-8"))


def by_class(root, tag, cls):
    return [e for e in root.iter(NS + tag) if e.get("class") == cls]


def test_cb5_element_counts():
    root = parse(render_svg(build_cb(5, 1)))
    assert len(list(root.iter(NS + "circle"))) == 7
    assert len(list(root.iter(NS + "line"))) == 1
    assert len(by_class(root, "path", "point")) == 3
    assert by_class(root, "path", "square") == []


@pytest.mark.parametrize("cfg", [build_cb(5, 1), build_ca(4, 1), build_cb(1, F(2, 3))])
def test_deterministic(cfg):
    assert render_svg(cfg) == render_svg(cfg)
    opts = RenderOptions(decimals=3, show_labels=False)
    assert render_svg(cfg, opts) == render_svg(cfg, opts)


def test_ca4_counts():
    root = parse(render_svg(build_ca(4, 1)))
    assert len(list(root.iter(NS + "circle"))) == 5


def test_circle_attributes_match_exact_values():
    cfg = build_cb(5, F(7, 5))
    opts = RenderOptions(decimals=8)
    root = parse(render_svg(cfg, opts))
    drawn = list(root.iter(NS + "circle"))
    for el, c in zip(drawn, cfg.circles):
        assert el.get("cx") == f"{qnum_to_float(c.center.x):.8f}"
        assert el.get("cy") == f"{qnum_to_float(c.center.y):.8f}"
        assert el.get("r") == f"{qnum_to_float(c.r):.8f}"


def test_square_overlay_on_cb1():
    cfg = build_cb(1, 1)
    opts = RenderOptions(show_square=True, decimals=6)
    root = parse(render_svg(cfg, opts))
    (square,) = by_class(root, "path", "square")
    nums = [float(t) for t in re.findall(r"-?\d+\.\d+", square.get("d"))]
    corners = list(zip(nums[0::2], nums[1::2]))
    assert len(corners) == 4
    markers = {}
    for el in by_class(root, "path", "point"):
        m = [float(t) for t in re.findall(r"-?\d+\.\d+", el.get("d"))]
        # "M x-r y A r r 0 1 0 x+r y ..."
        markers[el.get("id")] = ((m[0] + m[4]) / 2, m[1])
    tol = 1.5e-6
    for corner, name in ((corners[1], "ptB"), (corners[2], "ptC")):
        assert abs(corner[0] - markers[name][0]) <= tol
        assert abs(corner[1] - markers[name][1]) <= tol


def test_square_overlay_rejected_elsewhere():
    with pytest.raises(ValueError):
        render_svg(build_cb(2, 1), RenderOptions(show_square=True))
    with pytest.raises(ValueError):
        render_svg(build_ca(3, 1), RenderOptions(show_square=True))


def test_no_exponents_or_negative_zero():
    svg = render_svg(build_cb(40, 1), RenderOptions(decimals=2))
    assert not re.search(r"\d[eE][-+]?\d", svg)
    assert "-0.00 " not in svg and '"-0.00"' not in svg


@pytest.mark.parametrize(
    "kwargs",
    [{"width_px": 50}, {"margin_fraction": F(1, 2)}, {"margin_fraction": F(0)}, {"decimals": 1}, {"decimals": 13}],
)
def test_options_validated(kwargs):
    with pytest.raises(ValueError):
        RenderOptions(**kwargs)


def test_labels_toggle():
    cfg = build_cb(3, 1)
    with_labels = parse(render_svg(cfg))
    without = parse(render_svg(cfg, RenderOptions(show_labels=False)))
    texts = [t.text for t in with_labels.iter(NS + "text")]
    assert texts == ["α1", "α2", "β1", "β2", "β3", "A", "B", "C"]
    assert list(without.iter(NS + "text")) == []


def test_report_all_pass():
    report = VerificationReport([(f"identity {i}", True) for i in range(7)])
    lines = render_report(report).splitlines()
    assert len(lines) == 8
    assert lines[-1] == "OVERALL PASS"
    assert all(line.endswith("PASS") for line in lines)


def test_report_one_failure():
    report = VerificationReport([("first", True), ("second, longer", False)])
    lines = render_report(report).splitlines()
    assert lines[1].endswith("FAIL") and lines[1].startswith("second, longer")
    assert lines[0].index("PASS") == lines[1].index("FAIL")
    assert lines[-1] == "OVERALL FAIL"


def test_report_empty():
    assert render_report(VerificationReport()) == "OVERALL PASS\n"


def test_report_of_real_config_is_stable():
    text = render_report(verify_config(build_ca(4, 1)))
    assert text == render_report(verify_config(build_ca(4, 1)))
    assert text.endswith("OVERALL PASS\n")
