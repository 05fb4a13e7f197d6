"""JSON input and output formats.

Inputs validate hard and raise InputError naming the offending field.
Outputs are built in deterministic key and element order, so identical
inputs serialize to byte-identical JSON.
"""

import json

import numpy as np

from .groups import FiniteGroup, GSet


class InputError(ValueError):
    """Malformed input file or object."""


def dumps(obj):
    return json.dumps(obj, separators=(",", ":"), sort_keys=False) + "\n"


def _perm_rows(field, raw, expected_degree=None):
    if not isinstance(raw, list):
        raise InputError("%s must be a list of permutations" % field)
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or \
                not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise InputError("%s[%d] must be a list of integers" % (field, i))
        if expected_degree is not None and len(row) != expected_degree:
            raise InputError("%s[%d] has length %d, expected %d"
                             % (field, i, len(row), expected_degree))
        if sorted(row) != list(range(len(row))):
            raise InputError("%s[%d] is not a permutation of 0..%d"
                             % (field, i, len(row) - 1))
        rows.append(row)
    return rows


def load_group(data):
    """Group from {"degree": d, "generators": [[images], ...]}."""
    if not isinstance(data, dict):
        raise InputError("group file must contain a JSON object")
    degree = data.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise InputError("degree must be a positive integer")
    gens = _perm_rows("generators", data.get("generators", []), degree)
    return FiniteGroup.from_generators(degree, gens)


def load_gset(data, group):
    """G-set from {"points": k, "generator_action": [[images], ...]}."""
    if not isinstance(data, dict):
        raise InputError("gset file must contain a JSON object")
    points = data.get("points")
    if not isinstance(points, int) or isinstance(points, bool) or points < 0:
        raise InputError("points must be a nonnegative integer")
    rows = _perm_rows("generator_action", data.get("generator_action", []),
                      points)
    ngens = len(group.generator_indices)
    if len(rows) != ngens:
        raise InputError("generator_action has %d rows, the group has %d "
                         "generators" % (len(rows), ngens))
    try:
        return GSet.from_generator_action(group, points, rows)
    except ValueError as e:
        raise InputError(str(e))


def load_group_file(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError("cannot read group file: %s" % e)
    except json.JSONDecodeError as e:
        raise InputError("group file is not valid JSON: %s" % e)
    return load_group(data)


def load_gset_file(path, group):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError("cannot read gset file: %s" % e)
    except json.JSONDecodeError as e:
        raise InputError("gset file is not valid JSON: %s" % e)
    return load_gset(data, group)


# -- output -------------------------------------------------------------------


def _row(images):
    return [int(x) for x in images]


def group_to_json(G):
    if G.generators:
        gens = [list(g.images) for g in G.generators]
    else:
        gens = [_row(G.elements[i]) for i in G.small_generating_set()]
    return {"degree": G.degree, "order": int(G.size), "generators": gens}


def gset_to_json(X):
    G = X.group
    return {"points": X.npoints,
            "generator_action": [_row(X.action[g])
                                 for g in G.generator_indices]}


def classes_to_json(G):
    out = []
    for cls in G.conjugacy_classes:
        rep = int(cls[0])
        out.append({
            "representative": _row(G.elements[rep]),
            "size": int(len(cls)),
            "element_order": int(G.element_orders[rep]),
        })
    return {"degree": G.degree, "order": int(G.size), "classes": out}


def tuples_to_json(G, n, tuples):
    return {
        "n": int(n),
        "count": len(tuples),
        "tuples": [[_row(G.elements[e]) for e in t.entries] for t in tuples],
    }


def skeleton_to_json(skel):
    G = skel.group
    out = []
    for comp in skel.components:
        out.append({
            "sigma": [_row(G.elements[e]) for e in comp.sigma.entries],
            "orbit_rep": int(comp.orbit_rep),
            "orbit_size": int(comp.orbit_size),
            "stabilizer_order": int(comp.stabilizer.size),
        })
    return {"n": skel.n, "count": len(out), "components": out}


def poly_to_json(p):
    return [{"exp": list(e), "c": c} for e, c in p.sorted_terms()]


def ring_to_json(ring):
    G = ring.group
    comps = []
    for comp in ring.components:
        sk = comp.skeleton
        basis = []
        for b in comp.module.basis:
            basis.append({
                "char_degree": comp.module.table.chars[b.char_index].degree,
                "q_degree": b.q_degree_strings(),
            })
        comps.append({
            "sigma": [_row(G.elements[e]) for e in sk.sigma.entries],
            "orbit_rep": int(sk.orbit_rep),
            "orbit_size": int(sk.orbit_size),
            "stabilizer_order": int(sk.stabilizer.size),
            "basis": basis,
        })
    return {
        "group": group_to_json(G),
        "gset": gset_to_json(ring.gset),
        "n": ring.n,
        "components": comps,
        "total_rank": ring.total_rank,
    }


def class_to_json(x):
    ring = x.ring
    G = ring.group
    comps = []
    for ci in sorted(x.coords):
        comp = ring.components[ci]
        terms = []
        for bi in sorted(x.coords[ci]):
            b = comp.module.basis[bi]
            terms.append({
                "character_index": bi,
                "q_degree": b.q_degree_strings(),
                "coeff": poly_to_json(x.coords[ci][bi]),
            })
        comps.append({
            "component": ci,
            "sigma": [_row(G.elements[e]) for e in comp.sigma.entries],
            "terms": terms,
        })
    return {"n": ring.n, "components": comps}


def map_report(m):
    blocks = []
    for s_ci, t_cis in sorted(m.source_blocks().items()):
        entries = []
        for t_ci in t_cis:
            _, rowmap = m.rows[t_ci]
            for s_bi in sorted(rowmap):
                for t_bi, coeff in rowmap[s_bi]:
                    entries.append({
                        "source": [s_ci, s_bi],
                        "target": [t_ci, int(t_bi)],
                        "coeff": poly_to_json(coeff),
                    })
        blocks.append({"source_component": s_ci,
                       "target_components": list(t_cis),
                       "entries": entries})
    return {
        "map": m.label,
        "source_rank": m.source.total_rank,
        "target_rank": m.target.total_rank,
        "bijective": m.is_bijective(),
        "blocks": blocks,
    }


def tate_to_json(ring):
    G = ring.group
    comps = []
    for comp in ring.components:
        sk = comp.skeleton
        symbols = []
        for bi, b in enumerate(comp.module.basis):
            k, l = b.q_num[0], b.orders[0]
            if k == 0:
                symbol = "[chi%d]" % bi
            else:
                symbol = "q^(%d/%d)*[chi%d]" % (k, l, bi)
            symbols.append({
                "character_index": bi,
                "char_degree": comp.module.table.chars[b.char_index].degree,
                "q_degree": "%d/%d" % (k, l),
                "symbol": symbol,
            })
        comps.append({
            "sigma": [_row(G.elements[e]) for e in sk.sigma.entries],
            "orbit_rep": int(sk.orbit_rep),
            "symbols": symbols,
        })
    return {
        "coefficients": "Z((q))",
        "group": group_to_json(G),
        "gset": gset_to_json(ring.gset),
        "n": ring.n,
        "components": comps,
        "total_rank": ring.total_rank,
    }
