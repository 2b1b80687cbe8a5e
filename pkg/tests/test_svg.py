import math
import xml.etree.ElementTree as ET

from p1stab import Region, StabilityCondition, hn, parse_object, scan_path
from p1stab.svg import Canvas, interpolated_params, k_domain_svg, rays_svg, scan_svg


def parse(text):
    root = ET.fromstring(text.split("\n", 1)[1])
    assert root.tag.endswith("svg")
    return root


def tags(root, name):
    return [e for e in root.iter() if e.tag.endswith(name)]


def test_rays():
    sc = StabilityCondition(0, 0.9, 0.1)
    root = parse(rays_svg(sc, hn(sc, parse_object("O(2)"))))
    assert len(tags(root, "polyline")) == 5
    labels = [t.text for t in tags(root, "text")]
    assert any("3*O(0)" in s for s in labels)


def test_k_domain():
    pts = [(complex(0.0, 2.0), Region.INTERIOR), (complex(math.log(2), math.pi / 3), Region.BOUNDARY)]
    root = parse(k_domain_svg(pts))
    assert len(tags(root, "circle")) == 2
    assert len(tags(root, "polygon")) == 1


def test_scan():
    a = StabilityCondition(0, 0.9, 0.1)
    b = StabilityCondition(0, 0.25, 0.75)
    path = scan_path(a, b, 10)
    root = parse(scan_svg(path, interpolated_params(a, b, [t for t, _ in path])))
    assert len(tags(root, "circle")) == len(path)


def test_escape():
    c = Canvas()
    c.text(0, 0, "a<b&c")
    assert "a&lt;b&amp;c" in c.render()
