"""Displayed low-index coproducts, transcribed into parser syntax."""

COPRODUCTS = {
    ("a", 1): "1 (x) 1",
    ("a", 2): "1 (x) a2 + a2 (x) 1",
    ("a", 3): "1 (x) a3 + a3 (x) 1 + 2*a2 (x) a2 + b1 (x) c2",
    ("b", 1): "1 (x) b1 + b1 (x) 1",
    ("b", 2): "1 (x) b2 + b2 (x) 1 + 2*a2 (x) b1 + b1 (x) d1 + b1 (x) a2",
    ("b", 3): "1 (x) b3 + b3 (x) 1 + 2*a2 (x) b2 + 2*a2 (x) a2*b1 + 3*a3 (x) b1"
              " + b1 (x) d2 + b1 (x) a2*d1 + b2 (x) d1 + b1 (x) a3 + 2*b2 (x) a2"
              " - b1 (x) b1*c2",
    ("c", 2): "1 (x) c2 + c2 (x) 1",
    ("c", 3): "1 (x) c3 + c3 (x) 1 + 2*c2 (x) a2 + d1 (x) c2",
    ("d", 1): "1 (x) d1 + d1 (x) 1",
    ("d", 2): "1 (x) d2 + d2 (x) 1 + 2*c2 (x) b1 + d1 (x) d1 + d1 (x) a2",
    ("d", 3): "1 (x) d3 + d3 (x) 1 + 2*c2 (x) b2 + 2*c2 (x) a2*b1 + 3*c3 (x) b1"
              " + d1 (x) d2 + d1 (x) a2*d1 + d2 (x) d1 + d1 (x) a3 + 2*d2 (x) a2"
              " - d1 (x) b1*c2",
}
