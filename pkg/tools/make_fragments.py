"""Emit the fragment fixture files for the shipped structure library.

Each drawing comes from the library of reducible structures: vertices with
degree bounds (3 for pinned 3-vertices, le4 otherwise, plus the one degree-2
case), host edges, reduced-graph-only edges, colored flags, and distance
assertions.  Run from the repository root; files land in the package
fixtures directory.
"""

import os

FIX = os.path.join(os.path.dirname(__file__), "..", "src", "dischargelab", "fixtures")

CSEP = "4-balanced separating cycles of length at most 5 are reducible"

SPECS = {
    "deg2": dict(
        desc="degree-2 vertex between colored neighbours; reduced by bridging them",
        deg={"v": 2}, colored=["u1", "u2"], removed=["v"],
        edges=[("v", "u1"), ("v", "u2")], gprime=[("u1", "u2")]),
    "config1": dict(
        desc="3-vertex on a 3-face; reduced by deleting it and bridging",
        deg={"a": 3}, colored=["b", "c", "d"], removed=["a"],
        edges=[("a", "b"), ("a", "c"), ("b", "c"), ("a", "d")],
        gprime=[("b", "d")]),
    "config2a": dict(
        desc="4-vertex on two 3-faces and a 4-face",
        colored=["b", "c", "d", "e", "f"], removed=["a"],
        edges=[("a", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("a", "e"),
               ("e", "d"), ("e", "f"), ("c", "f")],
        gprime=[("b", "d"), ("c", "e")]),
    "config2b": dict(
        desc="4-vertex on a 3-face and three 4-faces",
        colored=["b", "c", "d", "e", "f", "g", "h"], removed=["a"],
        edges=[("a", "b"), ("a", "d"), ("g", "d"), ("g", "b"), ("h", "e"),
               ("h", "c"), ("b", "c"), ("a", "c"), ("a", "e"), ("e", "f"),
               ("d", "f")],
        gprime=[("b", "d"), ("c", "e")]),
    "config3": dict(
        desc="3-vertex on two 4-faces",
        deg={"a": 3}, colored=["b", "c", "d", "e", "f"], removed=["a"],
        edges=[("a", "d"), ("d", "c"), ("a", "b"), ("b", "c"), ("a", "f"),
               ("f", "e"), ("e", "d")],
        gprime=[("b", "f")]),
    "fig8-d1": dict(
        desc="two adjacent 3-vertices",
        deg={"u": 3, "v": 3}, removed=["u"], edges=[("u", "v")]),
    "fig8-d2": dict(
        desc="three consecutive 3-faces around a vertex",
        removed=["b"],
        edges=[("ab", "a"), ("a", "b"), ("b", "ab"), ("ab", "bc"),
               ("bc", "c"), ("c", "b"), ("b", "bc")]),
    "fig8-d3": dict(
        desc="two 3-faces and a 4-face around a vertex",
        removed=["b"],
        edges=[("ab", "a"), ("a", "b"), ("b", "ab"), ("ab", "bc"),
               ("bc", "cd"), ("cd", "c"), ("c", "b"), ("b", "bc")]),
    "fig8-d4": dict(
        desc="edge-sharing 3-faces with a third 3-face across their vertex",
        removed=["b"],
        edges=[("ab", "a"), ("a", "b"), ("b", "ab"), ("ab", "bc"),
               ("bc", "cd"), ("cd", "c"), ("c", "bc"), ("bc", "b")]),
    "fig8-d5": dict(
        desc="edge-sharing 3-faces, 4-face across their vertex holding a 3-vertex",
        deg={"c": 3}, removed=["b"],
        edges=[("ab", "a"), ("a", "b"), ("b", "ab"), ("ab", "bc"),
               ("bc", "cd"), ("cd", "d"), ("d", "c"), ("c", "bc"), ("bc", "b")]),
    "fig8-d6": dict(
        desc="3-face and 4-face at a vertex with two nearby 3-vertices",
        deg={"a": 3, "c": 3}, removed=["bc"],
        edges=[("a", "b"), ("b", "ab"), ("ab", "bc"), ("bc", "cd"),
               ("cd", "d"), ("d", "c"), ("c", "bc"), ("bc", "b")]),
    "fig8-d7": dict(
        desc="3-face fan beside a 4-face carrying a far 3-face",
        removed=["b"],
        edges=[("ab", "a"), ("a", "b"), ("b", "ab"), ("ab", "bc"),
               ("bc", "cd"), ("cd", "de"), ("de", "d"), ("d", "c"),
               ("c", "bc"), ("bc", "b"), ("cd", "d")]),
    "fig8-d8": dict(
        desc="two edge-sharing 3-face pairs joined at their apexes",
        removed=["ab"],
        edges=[("az", "a"), ("a", "z"), ("z", "az"), ("az", "ab"), ("ab", "a"),
               ("de", "e"), ("e", "d"), ("d", "de"), ("de", "cd"), ("cd", "d"),
               ("ab", "cd")]),
    "fig8-d9": dict(
        desc="two edge-sharing 3-face pairs joined by an edge",
        removed=["a"],
        edges=[("z", "az"), ("az", "a"), ("a", "azp"), ("azp", "z"), ("z", "a"),
               ("a", "b"), ("b", "bcp"), ("bcp", "c"), ("c", "bc"), ("bc", "b"),
               ("b", "c")]),
    "fig8-d10": dict(
        desc="3-vertex beside a vertex of two edge-sharing 3-faces",
        deg={"a": 3}, removed=["b"],
        edges=[("a", "b"), ("b", "bcp"), ("bcp", "c"), ("c", "bc"),
               ("bc", "b"), ("b", "c")]),
    "fig8-d11": dict(
        desc="3-face and 4-face sharing an edge, 3-vertex on the 4-face",
        deg={"bp": 3}, removed=["bp"],
        edges=[("a", "ab"), ("ab", "b"), ("b", "a"), ("a", "ap"),
               ("ap", "bp"), ("bp", "b")]),
    "fig8-d12": dict(
        desc="3-vertex on a 4-face chained to a 4-face and a 3-face",
        deg={"c": 3}, removed=["c"],
        edges=[("a", "ab"), ("ab", "b"), ("b", "a"), ("a", "ap"), ("ap", "bp"),
               ("bp", "b"), ("b", "c"), ("c", "cp"), ("cp", "bp")]),
    "fig8-d13": dict(
        desc="edge-sharing 3-face pair, an edge, two vertex-sharing 3-faces",
        removed=["a"],
        edges=[("z", "az"), ("az", "a"), ("a", "azp"), ("azp", "z"), ("z", "a"),
               ("a", "b"), ("b", "bc"), ("bc", "c"), ("c", "b"), ("c", "cd"),
               ("cd", "d"), ("d", "c")]),
    "fig8-d14": dict(
        desc="edge-sharing 3-face pair, an edge, a 3-face with a pendant 3-vertex",
        deg={"d": 3}, removed=["a"],
        edges=[("z", "az"), ("az", "a"), ("a", "azp"), ("azp", "z"), ("z", "a"),
               ("a", "b"), ("b", "bc"), ("bc", "c"), ("c", "b"), ("d", "c")]),
    "fig8-d15": dict(
        desc="edge-sharing 3-face pair beside a 3-face with a pendant 3-vertex",
        deg={"c": 3}, removed=["a"],
        edges=[("z", "az"), ("az", "a"), ("a", "azp"), ("azp", "z"), ("z", "a"),
               ("a", "b"), ("b", "ab"), ("ab", "bc"), ("bc", "b"), ("b", "c")]),
    "fig8-d16": dict(
        desc="edge-sharing 3-face pair beside a 4-face with 3-faces on opposite edges",
        removed=["a"],
        edges=[("a", "ab"), ("ab", "b"), ("b", "abp"), ("abp", "a"), ("a", "b"),
               ("b", "c"), ("c", "cd"), ("cd", "d"), ("d", "f"), ("f", "ef"),
               ("ef", "e"), ("e", "c"), ("c", "d"), ("e", "f")]),
    "fig8-d17": dict(
        desc="3-vertex beside a 4-face with 3-faces on opposite edges",
        deg={"b": 3}, removed=["b"],
        edges=[("b", "c"), ("c", "cd"), ("cd", "d"), ("d", "f"), ("f", "ef"),
               ("ef", "e"), ("e", "c"), ("c", "d"), ("e", "f")]),
    "fig8-d18": dict(
        desc="3-face between two 4-faces in a ladder of 3- and 4-faces",
        removed=["c"],
        edges=[("az", "ab"), ("ab", "abp"), ("abp", "azp"), ("azp", "az"),
               ("az", "a"), ("a", "ab"), ("ab", "bc"), ("bc", "b"), ("b", "a"),
               ("b", "c"), ("c", "bc"), ("bc", "cd"), ("cd", "d"), ("d", "c"),
               ("d", "e"), ("e", "de"), ("de", "dep"), ("dep", "cdp"),
               ("cdp", "cd"), ("cd", "de")]),
    "fig8-d19": dict(
        desc="3-face against a 4-face ladder",
        removed=["c"],
        edges=[("az", "ab"), ("ab", "abp"), ("abp", "azp"), ("azp", "az"),
               ("az", "a"), ("a", "ab"), ("ab", "bc"), ("bc", "b"), ("b", "a"),
               ("c", "bc"), ("bc", "cd"), ("cd", "c"), ("c", "e"), ("e", "de"),
               ("de", "dep"), ("dep", "cdp"), ("cdp", "cd"), ("cd", "de")]),
    "fig8-d20": dict(
        desc="5-face with 3-faces on four edges",
        removed=["a"],
        edges=[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"),
               ("a", "ab"), ("ab", "b"), ("b", "bc"), ("bc", "c"),
               ("d", "de"), ("de", "e"), ("a", "ea"), ("ea", "e")]),
    "fig8-d21": dict(
        desc="5-face with 3-faces on three edges and a 4-face",
        removed=["a"],
        edges=[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"),
               ("a", "ab"), ("ab", "b"), ("b", "bc"), ("bc", "c"),
               ("d", "de"), ("de", "e"), ("a", "ap"), ("ap", "ep"), ("ep", "e")]),
    "fig8-d22": dict(
        desc="5-face with two adjacent edge 3-faces and a far 3-vertex",
        deg={"d": 3}, removed=["a"],
        edges=[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"),
               ("a", "ab"), ("ab", "b"), ("a", "ea"), ("ea", "e")]),
    "fig8-d23": dict(
        desc="5-face with two edge 3-faces split by a 4-face corner",
        removed=["a"],
        edges=[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"),
               ("b", "ab"), ("ab", "a"), ("a", "ea"), ("ea", "e"),
               ("ab", "bp"), ("bp", "bc"), ("bc", "b"), ("bc", "cp"), ("cp", "c")]),
    "fig8-d24": dict(
        desc="5-face with 3-faces on separated edges and a 4-face",
        removed=["a"],
        edges=[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"),
               ("b", "ab"), ("ab", "a"), ("b", "bc"), ("bc", "cp"), ("cp", "c"),
               ("d", "de"), ("de", "e")]),
    "fig8-d25": dict(
        desc="5-face with 4-faces on two edges, a corner 3-face and a 3-vertex",
        deg={"c": 3}, removed=["a"],
        edges=[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"),
               ("b", "bp"), ("bp", "ap"), ("ap", "a"), ("a", "app"),
               ("app", "ap"), ("b", "bc"), ("bc", "cp"), ("cp", "c")]),
    "fig8-d26": dict(
        desc="5-face with an edge 3-face, an edge 4-face, a 3-vertex and a far 4-face",
        deg={"c": 3}, removed=["a"],
        edges=[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"),
               ("b", "ap"), ("ap", "a"), ("a", "app"), ("app", "ep"), ("ep", "e"),
               ("b", "bc"), ("bc", "cp"), ("cp", "c")]),
    "fig8-d27": dict(
        desc="5-face with two adjacent edge 3-faces, a corner 3-face and a 4-face",
        removed=["a"],
        edges=[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"),
               ("b", "ab"), ("ab", "a"), ("c", "bc"), ("bc", "b"),
               ("a", "ap"), ("ap", "ep"), ("ep", "e"), ("e", "de"), ("de", "ep")]),
    "fig8-d28": dict(
        desc="5-face with a corner 3-face, a 3-vertex and 4-faces around",
        deg={"b": 3}, removed=["a"],
        edges=[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"),
               ("c", "cp"), ("cp", "bp"), ("bp", "b"), ("a", "app"),
               ("app", "ap"), ("ap", "a"), ("e", "ep"), ("ep", "ap"),
               ("e", "de"), ("de", "d")]),
    "c0": dict(
        desc="3-vertex on a 4-face with a pendant 3-vertex two steps away; "
             "reduced by deleting one quad edge",
        deg={"b": 3, "c": 3}, colored=["d", "e"],
        edges=[("a", "e"), ("e", "d"), ("a", "c"), ("c", "d"), ("a", "b")]),
    "c1": dict(
        desc="3-face, two 4-faces and a 3-face in an edge chain",
        removed=["a"], distant=[("b", "c")],
        edges=[("a", "g"), ("g", "b"), ("a", "d"), ("a", "b"), ("b", "e"),
               ("e", "f"), ("f", "a"), ("f", "c"), ("c", "d"), ("c", "h"),
               ("h", "d")]),
    "c2": dict(
        desc="3-face between two 4-faces each carrying a far 3-face",
        removed=["a"], distant=[("b", "c")],
        edges=[("b", "a"), ("b", "g"), ("a", "h"), ("g", "e"), ("e", "f"),
               ("f", "a"), ("f", "d"), ("h", "i"), ("d", "c"), ("c", "h"),
               ("c", "i"), ("a", "d"), ("b", "e")]),
    "c3": dict(
        desc="3-face, three 4-faces and a 3-face in an edge chain",
        removed=["a"], distant=[("b", "c")],
        edges=[("e", "a"), ("e", "b"), ("a", "d"), ("d", "h"), ("h", "j"),
               ("b", "f"), ("g", "a"), ("f", "g"), ("a", "b"), ("g", "c"),
               ("c", "d"), ("c", "i"), ("i", "j"), ("j", "d")]),
    "c4": dict(
        desc="5-face with 3-faces on alternating edges and flanking 4-faces",
        removed=["a"], distant=[("b", "c")],
        edges=[("c", "d"), ("c", "e"), ("d", "a"), ("a", "j"), ("j", "e"),
               ("a", "b"), ("h", "i"), ("f", "d"), ("g", "h"), ("g", "d"),
               ("h", "a"), ("b", "j"), ("f", "c"), ("i", "b"), ("e", "m"),
               ("e", "l"), ("m", "l"), ("k", "j"), ("k", "m")]),
    "c5": dict(
        desc="5-face with a 3-vertex, two edge 3-faces and a corner 4-face",
        deg={"a": 3}, colored=["g", "h"], removed=["a"], distant=[("b", "c")],
        edges=[("b", "e"), ("b", "a"), ("e", "i"), ("i", "d"), ("d", "a"),
               ("h", "c"), ("f", "e"), ("g", "h"), ("g", "i"), ("c", "i"),
               ("c", "d"), ("f", "b")]),
    "c6": dict(
        desc="5-face with three edge 3-faces and a corner 3-face",
        colored=["g", "h"], removed=["a"], distant=[("b", "c")],
        edges=[("d", "a"), ("d", "c"), ("a", "j"), ("j", "i"), ("i", "c"),
               ("c", "h"), ("c", "g"), ("f", "a"), ("b", "j"), ("b", "a"),
               ("e", "j"), ("e", "i"), ("f", "d"), ("g", "h")]),
    "c7": dict(
        desc="5-face with an edge 3-face between corner 4-faces and edge 4-faces",
        removed=["b"],
        distant=[("e", "k"), ("a", "h"), ("a", "k"), ("h", "k")],
        edges=[("a", "b"), ("a", "e"), ("b", "c"), ("c", "d"), ("d", "e"),
               ("c", "i"), ("b", "i"), ("f", "g"), ("g", "h"), ("j", "k"),
               ("k", "l"), ("g", "b"), ("c", "k"), ("h", "i"), ("f", "a"),
               ("d", "l"), ("i", "j")]),
}


def emit(name, spec):
    deg = spec.get("deg", {})
    colored = set(spec.get("colored", ()))
    removed = set(spec.get("removed", ()))
    verts = sorted({v for e in spec["edges"] for v in e}
                   | {v for e in spec.get("gprime", ()) for v in e}
                   | set(deg) | colored | removed)
    lines = [f"# {spec['desc']}"]
    for v in verts:
        d = deg.get(v)
        dtxt = str(d) if d is not None else "le4"
        state = "colored" if v in colored else "open"
        extra = " removed" if v in removed else ""
        lines.append(f"v {v} deg={dtxt} {state}{extra}")
    for a, b in sorted(tuple(sorted(e)) for e in spec["edges"]):
        lines.append(f"e {a} {b}")
    for a, b in sorted(tuple(sorted(e)) for e in spec.get("gprime", ())):
        lines.append(f"e {a} {b} gprime-only")
    for a, b in spec.get("distant", ()):
        lines.append(f"distant {a} {b} reason={CSEP}")
    path = os.path.join(FIX, f"{name}.frag")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def main():
    for name, spec in SPECS.items():
        emit(name, spec)
    print(f"wrote {len(SPECS)} fragments to {FIX}")


if __name__ == "__main__":
    main()
