"""Finite categories, functors, natural transformations, and the finite-limit toolkit.

A finite category is stored as a total composition table over composable
pairs.  Everything is kept strictly on the nose: morphism equality is
identifier equality, and all derived constructions (pullbacks, functor
categories, commas) produce deterministic canonical names, so repeated
runs are reproducible bit for bit.
"""

from __future__ import annotations

import itertools
import json

from .bounds import SizeBounds, default_bounds
from .errors import SizeBoundError


def name_tuple(*parts) -> str:
    """Canonical unambiguous name for a tuple of existing names.

    JSON-encoding keeps nested derived names (pairs of pairs, commas of
    pullbacks, ...) collision-free where naive comma-joining would not be.
    """
    return json.dumps(list(parts), separators=(",", ":"))


class FinCategory:
    """A finite category: objects, morphisms with dom/cod, identities, composition.

    `compose[(g, f)]` is the composite g after f, defined exactly when
    cod(f) = dom(g).  Instances are immutable after construction.
    """

    def __init__(self, name, objects, morphisms, identity, compose):
        self.name = name
        self.objects = tuple(objects)
        self.morphisms = tuple((str(m), str(d), str(c)) for (m, d, c) in morphisms)
        self.identity = {str(k): str(v) for k, v in dict(identity).items()}
        self.compose_table = {(str(g), str(f)): str(gf) for (g, f), gf in dict(compose).items()}
        self.mor_ids = tuple(m for (m, _, _) in self.morphisms)
        self.dom = {m: d for (m, d, c) in self.morphisms}
        self.cod = {m: c for (m, d, c) in self.morphisms}
        self._hom = {}
        for (m, d, c) in self.morphisms:
            self._hom.setdefault((d, c), []).append(m)
        self.identity_ids = frozenset(self.identity.values())
        self._signature = None

    @property
    def n_objects(self):
        return len(self.objects)

    @property
    def n_morphisms(self):
        return len(self.morphisms)

    def id_of(self, x):
        return self.identity[x]

    def hom(self, x, y):
        return tuple(self._hom.get((x, y), ()))

    def compose(self, g, f):
        """Composite g∘f; raises KeyError when (g, f) is not composable."""
        return self.compose_table[(g, f)]

    def compose_chain(self, *ms):
        """Compose a chain given outermost-first: compose_chain(h, g, f) = h∘g∘f."""
        out = ms[0]
        for m in ms[1:]:
            out = self.compose(out, m)
        return out

    def is_identity(self, m):
        return m in self.identity_ids

    def signature(self):
        if self._signature is None:
            self._signature = (
                self.objects,
                self.morphisms,
                tuple(sorted(self.identity.items())),
                tuple(sorted(self.compose_table.items())),
            )
        return self._signature

    def same_as(self, other):
        """Strict on-the-nose equality of category data (names included)."""
        return self.signature() == other.signature()

    def __repr__(self):
        return f"FinCategory({self.name!r}, {self.n_objects} objects, {self.n_morphisms} morphisms)"


class FinFunctor:
    def __init__(self, name, source, target, object_map, morphism_map):
        self.name = name
        self.source = source
        self.target = target
        self.object_map = {str(k): str(v) for k, v in dict(object_map).items()}
        self.morphism_map = {str(k): str(v) for k, v in dict(morphism_map).items()}

    def on_obj(self, x):
        return self.object_map[x]

    def on_mor(self, m):
        return self.morphism_map[m]

    def maps_signature(self):
        return (
            tuple(self.object_map.get(x) for x in self.source.objects),
            tuple(self.morphism_map.get(m) for m in self.source.mor_ids),
        )

    def same_as(self, other):
        """On-the-nose equality: same source/target data and same maps."""
        return (
            self.source.same_as(other.source)
            and self.target.same_as(other.target)
            and self.maps_signature() == other.maps_signature()
        )

    def __repr__(self):
        return f"FinFunctor({self.name!r}: {self.source.name} -> {self.target.name})"


class NatTransf:
    """A natural transformation between parallel functors, stored by components."""

    def __init__(self, name, source, target, components):
        self.name = name
        self.source = source  # FinFunctor
        self.target = target  # FinFunctor
        self.components = {str(k): str(v) for k, v in dict(components).items()}

    def at(self, x):
        return self.components[x]

    def same_as(self, other):
        return (
            self.source.same_as(other.source)
            and self.target.same_as(other.target)
            and all(self.components.get(x) == other.components.get(x) for x in self.source.source.objects)
        )

    def __repr__(self):
        return f"NatTransf({self.name!r}: {self.source.name} => {self.target.name})"


# ---------------------------------------------------------------------------
# validation


def validate_category(cat: FinCategory):
    """Scan the whole table; return the list of violated constraints (empty iff a category)."""
    report = []
    seen = set()
    objset = set(cat.objects)
    if len(objset) != len(cat.objects):
        report.append("duplicate object identifiers")
    for (m, d, c) in cat.morphisms:
        if m in seen:
            report.append(f"duplicate morphism identifier {m!r}")
        seen.add(m)
        if d not in objset:
            report.append(f"morphism {m!r} has unknown domain {d!r}")
        if c not in objset:
            report.append(f"morphism {m!r} has unknown codomain {c!r}")
    for x in cat.objects:
        i = cat.identity.get(x)
        if i is None:
            report.append(f"object {x!r} has no identity")
        elif i not in cat.dom:
            report.append(f"identity of {x!r} is an unknown morphism {i!r}")
        elif not (cat.dom[i] == x and cat.cod[i] == x):
            report.append(f"identity of {x!r} is not an endomorphism of {x!r}")
    for x in cat.identity:
        if x not in objset:
            report.append(f"identity table mentions unknown object {x!r}")
    if report:
        return report  # structural damage; the axiom scan below assumes integrity

    # compose defined exactly on composable pairs
    for g in cat.mor_ids:
        for f in cat.mor_ids:
            composable = cat.cod[f] == cat.dom[g]
            entry = cat.compose_table.get((g, f))
            if composable and entry is None:
                report.append(f"compose({g!r}, {f!r}) undefined on composable pair")
            elif not composable and entry is not None:
                report.append(f"compose({g!r}, {f!r}) defined on non-composable pair")
            elif entry is not None:
                if entry not in cat.dom:
                    report.append(f"compose({g!r}, {f!r}) = unknown morphism {entry!r}")
                elif not (cat.dom[entry] == cat.dom[f] and cat.cod[entry] == cat.cod[g]):
                    report.append(f"compose({g!r}, {f!r}) has wrong boundary")
    if report:
        return report

    for (m, d, c) in cat.morphisms:
        if cat.compose_table[(cat.identity[c], m)] != m:
            report.append(f"identity law violated: id_{c!r} o {m!r} != {m!r}")
        if cat.compose_table[(m, cat.identity[d])] != m:
            report.append(f"identity law violated: {m!r} o id_{d!r} != {m!r}")

    for h in cat.mor_ids:
        for g in cat.mor_ids:
            if cat.cod[g] != cat.dom[h]:
                continue
            hg = cat.compose_table[(h, g)]
            for f in cat.mor_ids:
                if cat.cod[f] != cat.dom[g]:
                    continue
                if cat.compose_table[(hg, f)] != cat.compose_table[(h, cat.compose_table[(g, f)])]:
                    report.append(f"associativity violated on ({h!r}, {g!r}, {f!r})")
    return report


def validate_functor(fun: FinFunctor):
    report = []
    src, tgt = fun.source, fun.target
    tgt_objs = set(tgt.objects)
    for x in src.objects:
        y = fun.object_map.get(x)
        if y is None:
            report.append(f"object {x!r} not mapped")
        elif y not in tgt_objs:
            report.append(f"object {x!r} mapped to unknown {y!r}")
    for m in src.mor_ids:
        n = fun.morphism_map.get(m)
        if n is None:
            report.append(f"morphism {m!r} not mapped")
        elif n not in tgt.dom:
            report.append(f"morphism {m!r} mapped to unknown {n!r}")
    if report:
        return report
    for m in src.mor_ids:
        n = fun.on_mor(m)
        if tgt.dom[n] != fun.on_obj(src.dom[m]) or tgt.cod[n] != fun.on_obj(src.cod[m]):
            report.append(f"boundary not preserved on {m!r}")
    for x in src.objects:
        if fun.on_mor(src.id_of(x)) != tgt.id_of(fun.on_obj(x)):
            report.append(f"identity not preserved at {x!r}")
    for (g, f), gf in src.compose_table.items():
        if tgt.compose_table.get((fun.on_mor(g), fun.on_mor(f))) != fun.on_mor(gf):
            report.append(f"composition not preserved on ({g!r}, {f!r})")
    return report


def validate_nat(nat: NatTransf):
    report = []
    F, G = nat.source, nat.target
    if not (F.source.same_as(G.source) and F.target.same_as(G.target)):
        return ["source and target functors are not parallel"]
    dom_cat, cod_cat = F.source, F.target
    for x in dom_cat.objects:
        comp = nat.components.get(x)
        if comp is None:
            report.append(f"no component at {x!r}")
        elif comp not in cod_cat.dom:
            report.append(f"component at {x!r} is an unknown morphism {comp!r}")
        elif not (cod_cat.dom[comp] == F.on_obj(x) and cod_cat.cod[comp] == G.on_obj(x)):
            report.append(f"component at {x!r} has wrong boundary")
    if report:
        return report
    for m in dom_cat.mor_ids:
        x, y = dom_cat.dom[m], dom_cat.cod[m]
        lhs = cod_cat.compose(nat.at(y), F.on_mor(m))
        rhs = cod_cat.compose(G.on_mor(m), nat.at(x))
        if lhs != rhs:
            report.append(f"naturality square fails at morphism {m!r}")
    return report


# ---------------------------------------------------------------------------
# basic builders


def build_category(name, objects, arrows, compose):
    """Build a category from non-identity arrows; identities are added automatically.

    `arrows` is an iterable of (id, dom, cod); `compose` maps composable
    non-identity pairs to their composite id (which may itself be an
    identity id "1_x").  Identity composites are filled in.
    """
    objects = [str(o) for o in objects]
    identity = {x: f"1_{x}" for x in objects}
    morphisms = [(identity[x], x, x) for x in objects]
    morphisms += [(str(m), str(d), str(c)) for (m, d, c) in arrows]
    dom = {m: d for (m, d, c) in morphisms}
    cod = {m: c for (m, d, c) in morphisms}
    table = {}
    for g in dom:
        for f in dom:
            if cod[f] != dom[g]:
                continue
            if f == identity.get(dom[f]):
                table[(g, f)] = g
            elif g == identity.get(cod[g]):
                table[(g, f)] = f
            else:
                table[(g, f)] = str(compose[(g, f)])
    return FinCategory(name, objects, morphisms, identity, table)


def discrete_category(name, objects):
    return build_category(name, objects, [], {})


def chaotic_category(name, objects):
    """Exactly one morphism in every hom-set; composition is forced."""
    objects = [str(o) for o in objects]
    arrows = [(f"u_{x}_{y}", x, y) for x in objects for y in objects if x != y]
    mor = {(x, y): (f"u_{x}_{y}" if x != y else f"1_{x}") for x in objects for y in objects}
    compose = {}
    for x in objects:
        for y in objects:
            for z in objects:
                g, f = mor[(y, z)], mor[(x, y)]
                if x != y and y != z:
                    compose[(g, f)] = mor[(x, z)]
    return build_category(name, objects, arrows, compose)


def identity_functor(cat):
    return FinFunctor(
        f"1_{cat.name}", cat, cat,
        {x: x for x in cat.objects},
        {m: m for m in cat.mor_ids},
    )


def constant_functor(src, tgt, obj):
    return FinFunctor(
        f"const_{obj}", src, tgt,
        {x: obj for x in src.objects},
        {m: tgt.id_of(obj) for m in src.mor_ids},
    )


def compose_functors(g, f, name=None):
    """g∘f; requires f.target and g.source to be the same category data."""
    assert f.target.same_as(g.source), "functors not composable"
    return FinFunctor(
        name or f"{g.name}.{f.name}", f.source, g.target,
        {x: g.on_obj(f.on_obj(x)) for x in f.source.objects},
        {m: g.on_mor(f.on_mor(m)) for m in f.source.mor_ids},
    )


def identity_nat(fun):
    return NatTransf(
        f"id[{fun.name}]", fun, fun,
        {x: fun.target.id_of(fun.on_obj(x)) for x in fun.source.objects},
    )


def whisker_left(h, nat, name=None):
    """h∘nat for a functor h out of the transformation's target category."""
    newF = compose_functors(h, nat.source)
    newG = compose_functors(h, nat.target)
    return NatTransf(
        name or f"{h.name}.{nat.name}", newF, newG,
        {x: h.on_mor(nat.at(x)) for x in nat.source.source.objects},
    )


def whisker_right(nat, k, name=None):
    """nat∘k for a functor k into the transformation's source category."""
    newF = compose_functors(nat.source, k)
    newG = compose_functors(nat.target, k)
    return NatTransf(
        name or f"{nat.name}.{k.name}", newF, newG,
        {x: nat.at(k.on_obj(x)) for x in k.source.objects},
    )


def vcomp(beta, alpha, name=None):
    """Vertical composite beta . alpha of transformations F => G => H."""
    cod_cat = alpha.source.target
    return NatTransf(
        name or f"{beta.name}*{alpha.name}", alpha.source, beta.target,
        {x: cod_cat.compose(beta.at(x), alpha.at(x)) for x in alpha.source.source.objects},
    )


# ---------------------------------------------------------------------------
# shape catalog


def terminal():
    return build_category("1", ["*"], [], {})


def walking_arrow():
    return build_category("2", ["0", "1"], [("a", "0", "1")], {})


def composable_pair():
    return build_category(
        "3", ["0", "1", "2"],
        [("a", "0", "1"), ("b", "1", "2"), ("ba", "0", "2")],
        {("b", "a"): "ba"},
    )


def parallel_pair():
    return build_category("P", ["0", "1"], [("u", "0", "1"), ("v", "0", "1")], {})


def walking_iso():
    return build_category(
        "I", ["0", "1"],
        [("f", "0", "1"), ("g", "1", "0")],
        {("g", "f"): "1_0", ("f", "g"): "1_1"},
    )


def chaotic_two():
    return chaotic_category("C2", ["0", "1"])


def shape_catalog():
    return {
        "1": terminal(),
        "2": walking_arrow(),
        "3": composable_pair(),
        "P": parallel_pair(),
        "I": walking_iso(),
        "C2": chaotic_two(),
    }


def terminal_functor(cat, one=None):
    one = one or terminal()
    return constant_functor(cat, one, "*")


def collapse_functor(P=None, two=None):
    """The functor P -> 2 identifying the two parallel arrows u, v with a."""
    P = P or parallel_pair()
    two = two or walking_arrow()
    return FinFunctor(
        "collapse", P, two,
        {"0": "0", "1": "1"},
        {"1_0": "1_0", "1_1": "1_1", "u": "a", "v": "a"},
    )


# ---------------------------------------------------------------------------
# pullbacks of categories


class Pullback:
    def __init__(self, category, proj1, proj2):
        self.category = category
        self.proj1 = proj1
        self.proj2 = proj2


def pullback(F, G, name=None, bounds: SizeBounds | None = None):
    """Strict pullback of F: A -> C along G: B -> C in Cat, with its projections."""
    assert F.target.same_as(G.target), "pullback requires a shared target"
    bounds = bounds or default_bounds()
    A, B = F.source, G.source
    name = name or f"pb({F.name},{G.name})"

    objects, obj_pairs = [], []
    for a in A.objects:
        for b in B.objects:
            if F.on_obj(a) == G.on_obj(b):
                objects.append(name_tuple(a, b))
                obj_pairs.append((a, b))
    morphisms, mor_pairs = [], []
    for m in A.mor_ids:
        for n in B.mor_ids:
            if F.on_mor(m) == G.on_mor(n):
                morphisms.append((name_tuple(m, n), name_tuple(A.dom[m], B.dom[n]), name_tuple(A.cod[m], B.cod[n])))
                mor_pairs.append((m, n))
    bounds.check_construction("pullback", len(objects), len(morphisms))

    identity = {name_tuple(a, b): name_tuple(A.id_of(a), B.id_of(b)) for (a, b) in obj_pairs}
    compose = {}
    for (m2, n2) in mor_pairs:
        for (m1, n1) in mor_pairs:
            if A.cod[m1] == A.dom[m2] and B.cod[n1] == B.dom[n2]:
                compose[(name_tuple(m2, n2), name_tuple(m1, n1))] = name_tuple(
                    A.compose(m2, m1), B.compose(n2, n1)
                )
    P = FinCategory(name, objects, morphisms, identity, compose)
    p1 = FinFunctor(
        f"{name}.pr1", P, A,
        {name_tuple(a, b): a for (a, b) in obj_pairs},
        {name_tuple(m, n): m for (m, n) in mor_pairs},
    )
    p2 = FinFunctor(
        f"{name}.pr2", P, B,
        {name_tuple(a, b): b for (a, b) in obj_pairs},
        {name_tuple(m, n): n for (m, n) in mor_pairs},
    )
    return Pullback(P, p1, p2)


def pullback_mediator(pb, h1, h2, name=None):
    """The unique functor into a pullback induced by a commuting cone (h1, h2).

    Requires F∘h1 = G∘h2 to hold on the nose, which the caller guarantees;
    the induced maps are then forced componentwise.
    """
    X = h1.source
    return FinFunctor(
        name or "mediator", X, pb.category,
        {x: name_tuple(h1.on_obj(x), h2.on_obj(x)) for x in X.objects},
        {m: name_tuple(h1.on_mor(m), h2.on_mor(m)) for m in X.mor_ids},
    )


def product(A, B, bounds=None):
    """Binary product as the pullback over the terminal category."""
    one = terminal()
    return pullback(terminal_functor(A, one), terminal_functor(B, one), name=f"({A.name}x{B.name})", bounds=bounds)


# ---------------------------------------------------------------------------
# functor categories and enumeration


def enumerate_functors(J, C, bounds: SizeBounds | None = None):
    """All functors J -> C in deterministic order (object maps lexicographic)."""
    bounds = bounds or default_bounds()
    bounds.check_enum("enumerate_functors (domain)", J)
    bounds.check_enum("enumerate_functors (codomain)", C)

    non_id = [m for m in J.mor_ids if not J.is_identity(m)]
    out = []
    for images in itertools.product(C.objects, repeat=J.n_objects):
        omap = dict(zip(J.objects, images))
        mmap = {J.id_of(x): C.id_of(omap[x]) for x in J.objects}

        def backtrack(k):
            if k == len(non_id):
                out.append(
                    FinFunctor(f"F{len(out)}", J, C, dict(omap), dict(mmap))
                )
                return
            m = non_id[k]
            for cand in C.hom(omap[J.dom[m]], omap[J.cod[m]]):
                mmap[m] = cand
                ok = True
                for (g, f), gf in J.compose_table.items():
                    img_g, img_f, img_gf = mmap.get(g), mmap.get(f), mmap.get(gf)
                    if img_g is not None and img_f is not None and img_gf is not None:
                        if C.compose(img_g, img_f) != img_gf:
                            ok = False
                            break
                if ok:
                    backtrack(k + 1)
                del mmap[m]

        backtrack(0)
    return out


def enumerate_nats(F, G):
    """All natural transformations F => G, deterministic order."""
    J, C = F.source, F.target
    objs = list(J.objects)
    out = []

    def backtrack(k, comps):
        if k == len(objs):
            out.append(NatTransf(f"n{len(out)}", F, G, dict(comps)))
            return
        x = objs[k]
        for cand in C.hom(F.on_obj(x), G.on_obj(x)):
            comps[x] = cand
            ok = True
            for m in J.mor_ids:
                a, b = J.dom[m], J.cod[m]
                if a in comps and b in comps:
                    if C.compose(comps[b], F.on_mor(m)) != C.compose(G.on_mor(m), comps[a]):
                        ok = False
                        break
            if ok:
                backtrack(k + 1, comps)
            del comps[x]

    backtrack(0, {})
    return out


class FunctorCategory:
    """The category of functors J -> C, remembering which functor/nat each name denotes."""

    def __init__(self, category, functors, nats, J, C):
        self.category = category
        self.functors = functors      # object name -> FinFunctor
        self.nats = nats              # morphism name -> NatTransf
        self.J = J
        self.C = C
        self._obj_index = {self._functor_key(F): name for name, F in functors.items()}
        self._mor_index = {}
        for name, nat in nats.items():
            self._mor_index[self._nat_key(nat)] = name

    def _functor_key(self, F):
        return (
            tuple(F.on_obj(x) for x in self.J.objects),
            tuple(F.on_mor(m) for m in self.J.mor_ids),
        )

    def _nat_key(self, nat):
        return (
            self._functor_key(nat.source),
            self._functor_key(nat.target),
            tuple(nat.at(x) for x in self.J.objects),
        )

    def object_of(self, F):
        return self._obj_index[self._functor_key(F)]

    def morphism_of(self, nat):
        return self._mor_index[self._nat_key(nat)]


def functor_category(J, C, name=None, bounds: SizeBounds | None = None):
    """The functor category [J, C] with pointwise composition."""
    bounds = bounds or default_bounds()
    name = name or f"[{J.name},{C.name}]"
    functors = enumerate_functors(J, C, bounds=bounds)
    obj_names = []
    functor_by_name = {}
    for F in functors:
        oname = name_tuple(
            name_tuple(*(F.on_obj(x) for x in J.objects)),
            name_tuple(*(F.on_mor(m) for m in J.mor_ids)),
        )
        obj_names.append(oname)
        functor_by_name[oname] = F

    morphisms = []
    nat_by_name = {}
    identity = {}
    for src_name in obj_names:
        for tgt_name in obj_names:
            F, G = functor_by_name[src_name], functor_by_name[tgt_name]
            for nat in enumerate_nats(F, G):
                mname = name_tuple(src_name, tgt_name, name_tuple(*(nat.at(x) for x in J.objects)))
                morphisms.append((mname, src_name, tgt_name))
                nat_by_name[mname] = nat
                if src_name == tgt_name and all(
                    C.is_identity(nat.at(x)) for x in J.objects
                ):
                    identity[src_name] = mname
    bounds.check_construction("functor_category", len(obj_names), len(morphisms))

    compose = {}
    for (gname, gs, gt) in morphisms:
        for (fname, fs, ft) in morphisms:
            if ft != gs:
                continue
            g, f = nat_by_name[gname], nat_by_name[fname]
            comps = name_tuple(*(C.compose(g.at(x), f.at(x)) for x in J.objects))
            compose[(gname, fname)] = name_tuple(fs, gt, comps)
    cat = FinCategory(name, obj_names, morphisms, identity, compose)
    return FunctorCategory(cat, functor_by_name, nat_by_name, J, C)


# ---------------------------------------------------------------------------
# isomorphism search


def is_isomorphism(fun: FinFunctor) -> bool:
    """A functor is an isomorphism of categories iff bijective on objects and morphisms."""
    src, tgt = fun.source, fun.target
    if src.n_objects != tgt.n_objects or src.n_morphisms != tgt.n_morphisms:
        return False
    if len(set(fun.object_map[x] for x in src.objects)) != tgt.n_objects:
        return False
    if len(set(fun.morphism_map[m] for m in src.mor_ids)) != tgt.n_morphisms:
        return False
    return True


def inverse_functor(fun: FinFunctor, name=None):
    assert is_isomorphism(fun)
    return FinFunctor(
        name or f"{fun.name}^-1", fun.target, fun.source,
        {fun.on_obj(x): x for x in fun.source.objects},
        {fun.on_mor(m): m for m in fun.source.mor_ids},
    )


def _object_profile(cat, x):
    out_sizes = tuple(sorted(len(cat.hom(x, y)) for y in cat.objects))
    in_sizes = tuple(sorted(len(cat.hom(y, x)) for y in cat.objects))
    return (out_sizes, in_sizes, len(cat.hom(x, x)))


def categories_isomorphic(C, D, bounds: SizeBounds | None = None):
    """Search for an isomorphism C -> D; returns a witnessing FinFunctor or None.

    Deterministic lexicographic backtracking: objects are matched in C's
    stored order against D-candidates in D's stored order, pruned by
    hom-set size profiles; morphisms are then matched hom-set by hom-set
    with composition checked incrementally.
    """
    bounds = bounds or default_bounds()
    bounds.check_construction("categories_isomorphic", C.n_objects, C.n_morphisms)
    if C.n_objects != D.n_objects or C.n_morphisms != D.n_morphisms:
        return None
    if sorted(_object_profile(C, x) for x in C.objects) != sorted(_object_profile(D, y) for y in D.objects):
        return None

    profC = {x: _object_profile(C, x) for x in C.objects}
    profD = {y: _object_profile(D, y) for y in D.objects}

    def try_object_map(k, omap, used):
        if k == C.n_objects:
            yield dict(omap)
            return
        x = C.objects[k]
        for y in D.objects:
            if y in used or profC[x] != profD[y]:
                continue
            ok = True
            for x2, y2 in omap.items():
                if len(C.hom(x, x2)) != len(D.hom(y, y2)) or len(C.hom(x2, x)) != len(D.hom(y2, y)):
                    ok = False
                    break
            if not ok:
                continue
            omap[x] = y
            used.add(y)
            yield from try_object_map(k + 1, omap, used)
            del omap[x]
            used.remove(y)

    non_id = [m for m in C.mor_ids if not C.is_identity(m)]

    def try_morphisms(omap):
        mmap = {C.id_of(x): D.id_of(omap[x]) for x in C.objects}
        used = set(mmap.values())

        def backtrack(k):
            if k == len(non_id):
                return dict(mmap)
            m = non_id[k]
            for cand in D.hom(omap[C.dom[m]], omap[C.cod[m]]):
                if cand in used or D.is_identity(cand):
                    continue
                mmap[m] = cand
                used.add(cand)
                ok = True
                for (g, f), gf in C.compose_table.items():
                    ig, iff, igf = mmap.get(g), mmap.get(f), mmap.get(gf)
                    if ig is not None and iff is not None and igf is not None:
                        if D.compose(ig, iff) != igf:
                            ok = False
                            break
                if ok:
                    res = backtrack(k + 1)
                    if res is not None:
                        return res
                used.remove(cand)
                del mmap[m]
            return None

        return backtrack(0)

    for omap in try_object_map(0, {}, set()):
        mmap = try_morphisms(omap)
        if mmap is not None:
            return FinFunctor(f"iso({C.name},{D.name})", C, D, omap, mmap)
    return None


# ---------------------------------------------------------------------------
# inner (co)limits: limits computed inside a finite category, by enumeration


def inner_pullback(cat, f, g):
    """A pullback object of the cospan f: a -> b <- c: g inside `cat`, by search.

    Returns (p, pi1, pi2) or None.  Every candidate cone is tested for the
    universal property against all cones, so the result is definitive for
    the finite instance.
    """
    a, c = cat.dom[f], cat.dom[g]
    cones = []
    for p in cat.objects:
        for p1 in cat.hom(p, a):
            for p2 in cat.hom(p, c):
                if cat.compose(f, p1) == cat.compose(g, p2):
                    cones.append((p, p1, p2))
    for (p, p1, p2) in cones:
        universal = True
        for (x, h1, h2) in cones:
            mediators = [
                w for w in cat.hom(x, p)
                if cat.compose(p1, w) == h1 and cat.compose(p2, w) == h2
            ]
            if len(mediators) != 1:
                universal = False
                break
        if universal:
            return (p, p1, p2)
    return None


def inner_coequalizer(cat, g, h):
    """A coequaliser of the parallel pair (g, h) inside `cat`, by search."""
    assert cat.dom[g] == cat.dom[h] and cat.cod[g] == cat.cod[h]
    a = cat.cod[g]
    cocones = []
    for x in cat.objects:
        for u in cat.hom(a, x):
            if cat.compose(u, g) == cat.compose(u, h):
                cocones.append((x, u))
    for (x, u) in cocones:
        universal = True
        for (y, v) in cocones:
            mediators = [w for w in cat.hom(x, y) if cat.compose(w, u) == v]
            if len(mediators) != 1:
                universal = False
                break
        if universal:
            return (x, u)
    return None


def arrow_is_iso(cat, f):
    x, y = cat.dom[f], cat.cod[f]
    for g in cat.hom(y, x):
        if cat.compose(g, f) == cat.id_of(x) and cat.compose(f, g) == cat.id_of(y):
            return True
    return False
