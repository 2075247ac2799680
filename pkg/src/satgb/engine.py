"""Buchberger engine with pluggable pair selection and remainder strategies.

One generic main loop covers the plain algorithm, the homogenize-first
variant and the self-saturating variants: the differences live entirely in
the selection key (degree, sugar, or insertion order) and in what happens
to a remainder once its head is irreducible (nothing, a minimal
y-multiplication that re-enables reduction, or a final saturation).

Critical pairs are pruned at insertion time with the classic coprimality
and chain criteria (Gebauer-Moeller style), each independently switchable.
All tie-breaks are fixed, so two runs with the same configuration produce
identical transcripts and counters.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from heapq import heappop, heappush
from math import gcd as _gcd, lcm as _lcm

from .core import (
    ModuleVector,
    RingContext,
    Term,
    format_exps,
    pp_divides,
    pp_lcm,
    pp_quotient,
    vector_combine,
)
from .errors import DomainError, EngineTimeout, NonPositiveGradingError, StructureError
from .grading import top, top_deg, weight_of
from .homog import homogenize_generators, homogenized_context, is_homogeneous, saturate, y_excess
from .ordering import OrderSpec, extend_order
from .packed import FIELD as _PFIELD, codec_for
from .sugar import init_sugar, pair_sugar, top as _top, tuple_add


@dataclass(frozen=True)
class StrategyConfig:
    """What to pick in step (2a) and what to do in step (2b).

    remainder_mode 'plain' is the ordinary division algorithm; 'weaksat'
    interleaves same-saturation substitutions per ``weaksat_policy``;
    'selfsat' saturates every final irreducible remainder.
    """

    selection: str = "sugar"  # 'sugar' | 'degree' | 'insertion'
    remainder_mode: str = "plain"  # 'plain' | 'weaksat' | 'selfsat'
    weaksat_policy: object = "never"  # 'never' | 'ymultiply' | 'saturate_final' | hook
    coprime_criterion: bool = True
    chain_criterion: bool = True
    reduction_depth: str = "full"  # 'full' | 'head'

    def __post_init__(self):
        if self.selection not in ("sugar", "degree", "insertion"):
            raise StructureError(f"unknown selection {self.selection!r}")
        if self.remainder_mode not in ("plain", "weaksat", "selfsat"):
            raise StructureError(f"unknown remainder mode {self.remainder_mode!r}")
        if self.remainder_mode == "selfsat" and self.weaksat_policy != "saturate_final":
            object.__setattr__(self, "weaksat_policy", "saturate_final")


STRATEGY_A = StrategyConfig(selection="sugar", remainder_mode="plain")
STRATEGY_H = StrategyConfig(selection="degree", remainder_mode="weaksat", weaksat_policy="never")
STRATEGY_S = StrategyConfig(selection="sugar", remainder_mode="selfsat")


@dataclass
class RunStats:
    gb_len: int = 0
    poly_red: int = 0
    pairs_ins: int = 0
    wall_time: float = 0.0


@dataclass(frozen=True)
class BasisElement:
    """A monic basis vector plus its sweetener exponents and sugar."""

    vector: ModuleVector
    sweetener: tuple[int, ...]
    sugar: tuple[int, ...]
    birth: int


@dataclass(frozen=True)
class CriticalPair:
    left: int
    right: int
    lcm_term: Term
    sugar: tuple[int, ...]
    degree: tuple[int, ...]
    birth: int


@dataclass
class GBResult:
    basis: list[BasisElement]
    reduced: list[ModuleVector]
    stats: RunStats
    transcript: list | None = None


def _neg(k):
    if isinstance(k, tuple):
        return tuple(_neg(v) for v in k)
    return -k


class _Elem:
    """Internal basis record with everything the hot loop needs cached."""

    __slots__ = (
        "vec", "tail", "lt_coeff", "lt", "lt_exps", "comp", "mask", "sugar", "birth",
        "p_lt_ok", "p_lt_px", "p_tail", "p_lead", "p_itail",
    )

    def __init__(self, vec: ModuleVector, sugar, birth):
        self.vec = vec
        lc, lt = vec.summands[0]
        self.tail = vec.summands[1:]
        self.lt_coeff = lc
        self.lt = lt
        self.lt_exps = lt.exps
        self.comp = lt.comp
        self.mask = _mask(lt.exps)
        self.sugar = sugar
        self.birth = birth
        self.p_tail = None  # packed form, filled in by the engine's codec


def _mask(exps) -> int:
    m = 0
    for i, e in enumerate(exps):
        if e:
            m |= 1 << i
    return m


def s_vector(u: ModuleVector, v: ModuleVector, key, fieldk) -> ModuleVector:
    """Canonical cancellation combination of two same-component vectors."""
    cu, tu = u.leading()
    cv, tv = v.leading()
    if tu.comp != tv.comp:
        raise DomainError("S-vector needs leading terms in the same component")
    lcm = pp_lcm(tu.exps, tv.exps)
    qu = pp_quotient(lcm, tu.exps)
    qv = pp_quotient(lcm, tv.exps)
    one = fieldk.one
    return vector_combine(
        fieldk, key, fieldk.div(one, cu), qu, u, fieldk.neg(fieldk.div(one, cv)), qv, v
    )


class _Engine:
    def __init__(self, order, ctx: RingContext, cfg: StrategyConfig, deadline=None, events=None):
        self.ctx = ctx
        self.cfg = cfg
        self.field = ctx.field
        self.key = order.key_func(ctx)
        self.grading = ctx.grading
        self.m = ctx.m
        self.deadline = deadline
        self.events = events
        self.G: list[_Elem] = []
        self.reducers: dict[int, list[_Elem]] = {}
        self.pairs: dict[tuple[int, int], CriticalPair] = {}
        self.heap: list = []
        self.stats = RunStats()
        self.pair_births = 0
        self.codec = codec_for(order, ctx)
        self._fraction_free = self.codec is not None and getattr(
            ctx.field, "fraction_free", False
        )
        self._wcache: dict[int, tuple[int, ...]] = {}
        self._check_term_order(order)

    # -- setup ---------------------------------------------------------

    def _check_term_order(self, order):
        if not self.ctx.grading.positive:
            raise NonPositiveGradingError("grading is not positive; refusing to run")
        one = Term((0,) * self.ctx.width, 0)
        k1 = self.key(one)
        for i in range(self.ctx.width):
            e = tuple(1 if j == i else 0 for j in range(self.ctx.width))
            if not self.key(Term(e, 0)) > k1:
                raise DomainError("ordering is not a term ordering; refusing to run")

    # -- degrees -------------------------------------------------------

    def _term_degree(self, exps, comp) -> tuple[int, ...]:
        base = weight_of(exps, self.grading, homogenized=self.m > 0)
        delta = self.grading.shifts[comp]
        return tuple(a + b for a, b in zip(base, delta))

    def _vec_degree(self, summands) -> tuple[int, ...]:
        return top(self._term_degree(t.exps, t.comp) for _, t in summands)

    # -- reducer lookup --------------------------------------------------

    def _find_reducer(self, term: Term, tmask: int):
        cands = self.reducers.get(term.comp)
        if not cands:
            return None
        texps = term.exps
        for g in cands:
            if g.mask & ~tmask:
                continue
            for a, b in zip(g.lt_exps, texps):
                if a > b:
                    break
            else:
                return g
        return None

    def _pack_elem(self, elem: _Elem):
        codec = self.codec
        codec.check_exponents(elem.lt_exps)
        elem.p_lt_ok, elem.p_lt_px = codec.encode(elem.lt)
        elem.p_tail = [(c, *codec.encode(t)) for c, t in elem.tail]
        if self._fraction_free:
            # integer-primitive form: lead L > 0 and integer tail with no
            # common content, representing L * (monic vector)
            den = 1
            for c, _, _ in elem.p_tail:
                den = _lcm(den, c.denominator)
            ints = [int(c * den) for c, _, _ in elem.p_tail]
            g = int(den)
            for a in ints:
                g = _gcd(g, a)
                if g == 1:
                    break
            elem.p_lead = int(den // g)
            elem.p_itail = [
                (a // g, ok2, px2) for a, (_, ok2, px2) in zip(ints, elem.p_tail)
            ]

    def _insert_reducer(self, elem: _Elem):
        if self.codec is not None and elem.p_tail is None:
            self._pack_elem(elem)
        lst = self.reducers.setdefault(elem.comp, [])
        keyv = (elem.sugar, elem.birth)
        lo = 0
        hi = len(lst)
        while lo < hi:
            mid = (lo + hi) // 2
            if (lst[mid].sugar, lst[mid].birth) < keyv:
                lo = mid + 1
            else:
                hi = mid
        lst.insert(lo, elem)

    # -- division -------------------------------------------------------

    def divide(self, summands, sugar):
        """Run the division algorithm (with substitutions per the strategy)
        and return (remainder summands, sugar)."""
        cfg = self.cfg
        if self._fraction_free:
            plain_pass = self._plain_pass_fraction_free
        elif self.codec is not None:
            plain_pass = self._plain_pass_packed
        else:
            plain_pass = self._plain_pass
        while True:
            out, sugar = plain_pass(summands, sugar)
            if cfg.remainder_mode == "plain" or not out:
                return out, sugar
            policy = cfg.weaksat_policy
            if policy == "never":
                return out, sugar
            if policy == "saturate_final":
                return self._saturate_summands(out, sugar)
            if policy == "ymultiply":
                mult = self._y_multiplier(out)
                if mult is None:
                    return out, sugar
                summands, sugar = self._apply_y_mult(out, sugar, mult)
                continue
            # custom hook
            action = policy(ModuleVector(out), _WeakSatHelper(self, out))
            if action is None:
                return out, sugar
            if action[0] == "sat":
                new, new_sugar = self._saturate_summands(out, sugar)
                if new == out:
                    return out, sugar
                summands, sugar = new, new_sugar
                continue
            if action[0] == "ymul":
                summands, sugar = self._apply_y_mult(out, sugar, action[1])
                continue
            raise StructureError(f"unknown weak-saturation action {action!r}")

    def _plain_pass(self, summands, sugar):
        fieldk = self.field
        add, sub, mul = fieldk.add, fieldk.sub, fieldk.mul
        zero = fieldk.zero
        key = self.key
        head_only = self.cfg.reduction_depth == "head"
        grading = self.grading
        events = self.events
        D: dict[Term, object] = {}
        heap: list = []
        for c, t in summands:
            D[t] = c
            heappush(heap, (_neg(key(t)), t))
        out: list = []
        steps = 0
        while heap:
            _, t = heappop(heap)
            c = D.pop(t, None)
            if c is None or c == zero:
                continue
            g = self._find_reducer(t, _mask(t.exps))
            if g is None:
                out.append((c, t))
                if head_only:
                    rest = sorted(D.items(), key=lambda kv: key(kv[0]), reverse=True)
                    out.extend((cv, tv) for tv, cv in rest if cv != zero)
                    break
                continue
            q = tuple(a - b for a, b in zip(t.exps, g.lt_exps))
            if events is not None:
                events.append(("REDSTEP", g.birth, q))
            sugar = _top(
                [sugar, tuple_add(weight_of(q[self.m:], grading, False), g.sugar)]
            )
            for c2, t2 in g.tail:
                nt = Term(tuple(a + b for a, b in zip(q, t2.exps)), t2.comp)
                prev = D.get(nt)
                if prev is None:
                    D[nt] = mul(fieldk.neg(c), c2)
                    heappush(heap, (_neg(key(nt)), nt))
                else:
                    D[nt] = sub(prev, mul(c, c2))
            steps += 1
            if steps % 1024 == 0 and self.deadline is not None:
                if time.monotonic() > self.deadline:
                    raise EngineTimeout("time budget exceeded")
        return tuple(out), sugar

    def _plain_pass_packed(self, summands, sugar):
        """Division pass over the packed representation: ordering keys and
        exponent vectors are single integers, so term products are integer
        additions, heap comparisons are integer comparisons and divisibility
        is one guard-bit subtraction."""
        fieldk = self.field
        sub, mul, neg = fieldk.sub, fieldk.mul, fieldk.neg
        zero = fieldk.zero
        codec = self.codec
        guard = codec.guard
        cmask = (1 << _PFIELD) - 1
        head_only = self.cfg.reduction_depth == "head"
        grading = self.grading
        events = self.events
        m = self.m
        reducers = self.reducers
        wcache = self._wcache
        D: dict[int, object] = {}
        PX: dict[int, int] = {}
        heap: list[int] = []
        for c, t in summands:
            ok, px = codec.encode(t)
            D[ok] = c
            PX[ok] = px
            heappush(heap, -ok)
        out: list = []
        steps = 0
        while heap:
            ok = -heappop(heap)
            c = D.pop(ok, None)
            if c is None or c == zero:
                continue
            px = PX[ok]
            g = None
            cands = reducers.get(px & cmask)
            if cands:
                gpx = px | guard
                for cand in cands:
                    if (gpx - cand.p_lt_px) & guard == guard:
                        g = cand
                        break
            if g is None:
                out.append((c, codec.decode_px(px)))
                if head_only:
                    rest = sorted(D.items(), reverse=True)
                    out.extend(
                        (cv, codec.decode_px(PX[okv])) for okv, cv in rest if cv != zero
                    )
                    break
                continue
            qok = ok - g.p_lt_ok
            qpx = px - g.p_lt_px
            if events is not None:
                events.append(("REDSTEP", g.birth, codec.decode_exps(qpx)))
            wt = wcache.get(qpx)
            if wt is None:
                wt = weight_of(codec.decode_exps(qpx)[m:], grading, False)
                wcache[qpx] = wt
            s2 = tuple_add(wt, g.sugar)
            sugar = tuple(a if a > b else b for a, b in zip(sugar, s2))
            negc = neg(c)
            for c2, ok2, px2 in g.p_tail:
                nok = qok + ok2
                prev = D.get(nok)
                if prev is None:
                    D[nok] = mul(negc, c2)
                    PX[nok] = qpx + px2
                    heappush(heap, -nok)
                else:
                    D[nok] = sub(prev, mul(c, c2))
            steps += 1
            if steps % 1024 == 0 and self.deadline is not None:
                if time.monotonic() > self.deadline:
                    raise EngineTimeout("time budget exceeded")
        return tuple(out), sugar

    def _plain_pass_fraction_free(self, summands, sugar):
        """The packed pass over Q with integer working coefficients.

        Reducers are integer-primitive; each step pseudo-reduces (scales the
        live values by lead/gcd) and a single deferred rational scale sn/sd
        is applied to the output, with periodic content stripping. Same
        reduction path and exact remainder values as the rational pass,
        without a normalization gcd on every coefficient operation.
        """
        codec = self.codec
        guard = codec.guard
        cmask = (1 << _PFIELD) - 1
        head_only = self.cfg.reduction_depth == "head"
        grading = self.grading
        events = self.events
        m = self.m
        reducers = self.reducers
        wcache = self._wcache
        of = self.field.of
        sd = 1
        for c, _ in summands:
            sd = _lcm(sd, int(c.denominator))
        sn = 1
        D: dict[int, int] = {}
        PX: dict[int, int] = {}
        heap: list[int] = []
        for c, t in summands:
            ok, px = codec.encode(t)
            D[ok] = int(c * sd)
            PX[ok] = px
            heappush(heap, -ok)
        out: list = []
        steps = 0
        while heap:
            ok = -heappop(heap)
            c = D.pop(ok, None)
            if not c:
                continue
            px = PX[ok]
            g = None
            cands = reducers.get(px & cmask)
            if cands:
                gpx = px | guard
                for cand in cands:
                    if (gpx - cand.p_lt_px) & guard == guard:
                        g = cand
                        break
            if g is None:
                out.append([c, px])
                if head_only:
                    rest = sorted(D.items(), reverse=True)
                    out.extend([cv, PX[okv]] for okv, cv in rest if cv)
                    break
                continue
            qok = ok - g.p_lt_ok
            qpx = px - g.p_lt_px
            if events is not None:
                events.append(("REDSTEP", g.birth, codec.decode_exps(qpx)))
            wt = wcache.get(qpx)
            if wt is None:
                wt = weight_of(codec.decode_exps(qpx)[m:], grading, False)
                wcache[qpx] = wt
            s2 = tuple_add(wt, g.sugar)
            sugar = tuple(a if a > b else b for a, b in zip(sugar, s2))
            lead = g.p_lead
            g0 = _gcd(c, lead)
            mulv = lead // g0
            cc = c // g0
            if mulv != 1:
                for k in D:
                    D[k] *= mulv
                for pair in out:
                    pair[0] *= mulv
                sd *= mulv
            for a2, ok2, px2 in g.p_itail:
                nok = qok + ok2
                prev = D.get(nok)
                if prev is None:
                    D[nok] = -cc * a2
                    PX[nok] = qpx + px2
                    heappush(heap, -nok)
                else:
                    D[nok] = prev - cc * a2
            steps += 1
            if steps % 64 == 0:
                cont = 0
                for v in D.values():
                    cont = _gcd(cont, v)
                    if cont == 1:
                        break
                if cont != 1:
                    for pair in out:
                        cont = _gcd(cont, pair[0])
                        if cont == 1:
                            break
                if cont > 1:
                    for k in D:
                        D[k] //= cont
                    for pair in out:
                        pair[0] //= cont
                    sn *= cont
                if self.deadline is not None and time.monotonic() > self.deadline:
                    raise EngineTimeout("time budget exceeded")
        return tuple((of(c * sn, sd), codec.decode_px(px)) for c, px in out), sugar

    def _saturate_summands(self, summands, sugar):
        vec = ModuleVector(summands)
        new = saturate(vec, self.ctx, self.key)
        if new.summands != summands:
            if self.events is not None:
                delta = tuple(
                    a - b
                    for a, b in zip(self._vec_degree(summands), self._vec_degree(new.summands))
                )
                self.events.append(("SAT", delta))
            sugar = _top([sugar, self._vec_degree(new.summands)])
        return new.summands, sugar

    def _y_multiplier(self, summands):
        """Minimal y-power making the head reducible by an element whose
        saturated leading term divides the head's saturation."""
        m = self.m
        _, t = summands[0]
        cands = self.reducers.get(t.comp)
        if not cands:
            return None
        best = None
        xs = t.exps[m:]
        for g in cands:
            gx = g.lt_exps[m:]
            if not all(a <= b for a, b in zip(gx, xs)):
                continue
            a = tuple(max(0, ge - te) for ge, te in zip(g.lt_exps[:m], t.exps[:m]))
            if not any(a):
                continue  # plainly reducible already; the pass handles it
            rank = (sum(a), a, g.sugar, g.birth)
            if best is None or rank < best[0]:
                best = (rank, a)
        return None if best is None else best[1]

    def _apply_y_mult(self, summands, sugar, yexps):
        m = self.m
        pad = tuple(yexps) + (0,) * self.ctx.n
        new = tuple(
            (c, Term(tuple(a + b for a, b in zip(pad, t.exps)), t.comp)) for c, t in summands
        )
        if self.events is not None:
            self.events.append(("SAT", tuple(-v for v in yexps)))
        sugar = _top([sugar, self._vec_degree(new)])
        return new, sugar

    # -- selection ------------------------------------------------------

    def _gen_selkey(self, summands, sugar):
        if self.cfg.selection == "sugar":
            return sugar
        if self.cfg.selection == "degree":
            return self._vec_degree(summands)
        return None  # insertion: filled with the queue index by the caller

    def _push_generator(self, idx, summands, sugar):
        sel = self._gen_selkey(summands, sugar)
        if sel is None:
            sel = (idx,)
        heappush(self.heap, (sel, 0, idx, ("gen", summands, sugar, idx)))

    def _push_pair(self, pair: CriticalPair):
        sel = {
            "sugar": pair.sugar,
            "degree": pair.degree,
            "insertion": (pair.birth,),
        }[self.cfg.selection]
        heappush(
            self.heap,
            (sel, 1, pair.degree, self.key(pair.lcm_term), pair.birth, ("pair", pair)),
        )

    # -- pair bookkeeping -------------------------------------------------

    def _update_pairs(self, new_idx: int):
        G = self.G
        t = G[new_idx]
        cands = [i for i in range(new_idx) if G[i].comp == t.comp]
        self.stats.pairs_ins += len(cands)
        if not cands:
            return
        lcms = {i: pp_lcm(t.lt_exps, G[i].lt_exps) for i in cands}
        coprime_ok = self.cfg.coprime_criterion and self.ctx.rank == 1

        def is_coprime(i):
            return all(a == 0 or b == 0 for a, b in zip(t.lt_exps, G[i].lt_exps))

        if self.cfg.chain_criterion:
            kept1 = []
            if self.codec is not None:
                guard = self.codec.guard
                pl = {i: self.codec.mult_px(lcms[i]) for i in cands}
                for i in cands:
                    li = lcms[i]
                    gi = pl[i] | guard
                    if any(
                        j != i and lcms[j] != li and (gi - pl[j]) & guard == guard
                        for j in cands
                    ):
                        continue
                    kept1.append(i)
            else:
                for i in cands:
                    li = lcms[i]
                    if any(
                        j != i and lcms[j] != li and pp_divides(lcms[j], li) for j in cands
                    ):
                        continue
                    kept1.append(i)
            groups: dict[tuple, list[int]] = {}
            for i in kept1:
                groups.setdefault(lcms[i], []).append(i)
            kept = []
            for lcm_e in sorted(groups):
                grp = groups[lcm_e]
                if coprime_ok and any(is_coprime(i) for i in grp):
                    continue
                kept.append(min(grp))
            # chain criterion against older pairs
            for (i, j), pair in list(self.pairs.items()):
                if G[i].comp != t.comp:
                    continue
                lij = pair.lcm_term.exps
                if (
                    pp_divides(t.lt_exps, lij)
                    and lcms.get(i) != lij
                    and lcms.get(j) != lij
                ):
                    del self.pairs[(i, j)]
        else:
            kept = [i for i in cands if not (coprime_ok and is_coprime(i))]

        for i in kept:
            lcm_term = Term(lcms[i], t.comp)
            sug = pair_sugar(
                G[i].sugar, G[i].lt_exps, t.sugar, t.lt_exps, self.grading, self.m
            )
            pair = CriticalPair(
                left=i,
                right=new_idx,
                lcm_term=lcm_term,
                sugar=sug,
                degree=self._term_degree(lcm_term.exps, lcm_term.comp),
                birth=self.pair_births,
            )
            self.pair_births += 1
            self.pairs[(i, new_idx)] = pair
            self._push_pair(pair)

    # -- insertion --------------------------------------------------------

    def _add_element(self, summands, sugar):
        vec = ModuleVector(summands).monic(self.field)
        lt = vec.summands[0][1]
        # leading-term set must strictly grow (termination instrumentation)
        if self._find_reducer(lt, _mask(lt.exps)) is not None:
            raise StructureError("new basis element has a reducible leading term")
        deg = self._vec_degree(vec.summands)
        if any(s < d for s, d in zip(sugar, deg)):
            raise StructureError("sugar fell below the true degree")
        idx = len(self.G)
        elem = _Elem(vec, sugar, idx)
        self.G.append(elem)
        self._insert_reducer(elem)
        if self.events is not None:
            self.events.append(("ADD", idx, sugar))
        self._update_pairs(idx)
        return idx

    # -- main loop ---------------------------------------------------------

    def run(self, gens):
        fieldk = self.field
        seen = set()
        queue = []
        for v in gens:
            if v.is_zero():
                continue
            mv = v.monic(fieldk)
            if mv.summands in seen:
                continue
            seen.add(mv.summands)
            queue.append(mv)
        for idx, v in enumerate(queue):
            sugar = init_sugar(v, self.grading, self.m > 0)
            self._push_generator(idx, v.summands, sugar)
        while self.heap:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise EngineTimeout("time budget exceeded")
            _sel, _kind, *_rest, payload = heappop(self.heap)
            if payload[0] == "gen":
                _tag, summands, sugar, gidx = payload
                if self.events is not None:
                    self.events.append(("GEN", gidx))
            else:
                pair = payload[1]
                live = self.pairs.get((pair.left, pair.right))
                if live is not pair:
                    continue
                del self.pairs[(pair.left, pair.right)]
                self.stats.poly_red += 1
                if self.events is not None:
                    self.events.append(("PAIR", pair.left, pair.right))
                sv = s_vector(self.G[pair.left].vec, self.G[pair.right].vec, self.key, fieldk)
                summands, sugar = sv.summands, pair.sugar
            if not summands:
                continue
            summands, sugar = self.divide(summands, sugar)
            if summands:
                self._add_element(summands, sugar)
        return self.G


def _sweetener_of(vec: ModuleVector, sugar, ctx: RingContext):
    """Exponents a with companion = y^a * V^sat: sugar minus the degree of
    the saturation."""
    if ctx.m == 0:
        sat_deg = top_deg(vec, ctx.grading, homogenized=False)
    else:
        excess = y_excess(vec, ctx)
        sat_deg = tuple(
            d - e for d, e in zip(top_deg(vec, ctx.grading, True), excess)
        )
    return tuple(s - d for s, d in zip(sugar, sat_deg))


class _WeakSatHelper:
    """Handed to custom weak-saturation hooks so they can probe what the
    engine would do without reaching into its internals."""

    def __init__(self, engine: _Engine, summands):
        self._engine = engine
        self._summands = summands

    def y_multiplier(self):
        return self._engine._y_multiplier(self._summands)

    def saturation_changes(self) -> bool:
        vec = ModuleVector(self._summands)
        return saturate(vec, self._engine.ctx, self._engine.key).summands != self._summands


def buchberger(
    gens,
    order,
    ctx: RingContext,
    cfg: StrategyConfig = StrategyConfig(),
    *,
    deadline: float | None = None,
    want_transcript: bool = False,
) -> GBResult:
    """Run the configured variant and return the basis, its interreduction
    and the counters."""
    if cfg.remainder_mode != "plain":
        if ctx.m == 0:
            raise DomainError("saturating variants need a homogenized context")
        for v in gens:
            if not is_homogeneous(v, ctx.grading, homogenized=True):
                raise DomainError("saturating variants need homogeneous input")
    events = [] if want_transcript else None
    t0 = time.monotonic()
    eng = _Engine(order, ctx, cfg, deadline=deadline, events=events)
    eng.run(gens)
    basis = [
        BasisElement(e.vec, _sweetener_of(e.vec, e.sugar, ctx), e.sugar, e.birth) for e in eng.G
    ]
    reduced = interreduce([e.vec for e in eng.G], order, ctx)
    stats = eng.stats
    stats.gb_len = len(reduced)
    stats.wall_time = time.monotonic() - t0
    return GBResult(basis=basis, reduced=reduced, stats=stats, transcript=events)


def remainder(v: ModuleVector, G, order, ctx: RingContext, depth: str = "full") -> ModuleVector:
    """Plain division-algorithm remainder of v by the vectors in G."""
    cfg = StrategyConfig(remainder_mode="plain", reduction_depth=depth)
    eng = _Engine(order, ctx, cfg)
    for i, g in enumerate(G):
        if g.is_zero():
            continue
        sugar = init_sugar(g, ctx.grading, ctx.m > 0)
        eng.G.append(_Elem(g.monic(ctx.field), sugar, i))
        eng._insert_reducer(eng.G[-1])
    if v.is_zero():
        return v
    sugar = init_sugar(v, ctx.grading, ctx.m > 0)
    out, _ = eng.divide(v.summands, sugar)
    return ModuleVector(out)


def weak_sat_remainder(
    V: ModuleVector,
    G,
    order,
    ctx: RingContext,
    policy="ymultiply",
    want_transcript: bool = False,
):
    """Weak saturating remainder of a homogeneous vector by G."""
    if not is_homogeneous(V, ctx.grading, homogenized=True):
        raise DomainError("weak saturating remainder needs homogeneous input")
    cfg = StrategyConfig(remainder_mode="weaksat", weaksat_policy=policy)
    events = [] if want_transcript else None
    eng = _Engine(order, ctx, cfg, events=events)
    for i, g in enumerate(G):
        if g.is_zero():
            continue
        sugar = init_sugar(g, ctx.grading, True)
        eng.G.append(_Elem(g.monic(ctx.field), sugar, i))
        eng._insert_reducer(eng.G[-1])
    if V.is_zero():
        return (V, events) if want_transcript else V
    out, _ = eng.divide(V.summands, init_sugar(V, ctx.grading, True))
    res = ModuleVector(out)
    return (res, events) if want_transcript else res


def sat_remainder(V: ModuleVector, G, order, ctx: RingContext) -> ModuleVector:
    """Plain remainder followed by saturation."""
    r = remainder(V, G, order, ctx)
    if r.is_zero():
        return r
    return saturate(r, ctx, order.key_func(ctx))


def interreduce(vectors, order, ctx: RingContext) -> list[ModuleVector]:
    """Monic, auto-reduced, head-first basis. Unique for a true basis."""
    fieldk = ctx.field
    key = order.key_func(ctx)
    monic = []
    seen = set()
    for v in vectors:
        if v.is_zero():
            continue
        mv = v.monic(fieldk)
        if mv.summands in seen:
            continue
        seen.add(mv.summands)
        monic.append(mv)
    monic.sort(key=lambda v: key(v.summands[0][1]))
    minimal = []
    for v in monic:
        lt = v.summands[0][1]
        if any(
            k.summands[0][1].comp == lt.comp and pp_divides(k.summands[0][1].exps, lt.exps)
            for k in minimal
        ):
            continue
        minimal.append(v)
    # one shared engine so reducer caches are built once; dropping an
    # element from the reducer lists while it is being tail-reduced is
    # exactly "remainder by all the others"
    result = list(minimal)
    eng = _Engine(order, ctx, StrategyConfig(remainder_mode="plain"))
    elems = []
    for i, v in enumerate(result):
        e = _Elem(v, init_sugar(v, ctx.grading, ctx.m > 0), i)
        elems.append(e)
        eng.G.append(e)
        eng._insert_reducer(e)
    for i, v in enumerate(result):
        e = elems[i]
        lst = eng.reducers[e.comp]
        lst.remove(e)
        out, _ = eng.divide(v.summands, e.sugar)
        result[i] = ModuleVector(out).monic(fieldk)
        eng._insert_reducer(e)
    result.sort(key=lambda v: key(v.summands[0][1]), reverse=True)
    return result


def is_groebner_basis(G, order, ctx: RingContext) -> bool:
    """Buchberger criterion oracle: every same-component S-vector has zero
    remainder. Deliberately ignores all pair criteria."""
    key = order.key_func(ctx)
    vecs = [g.monic(ctx.field) for g in G if not g.is_zero()]
    if not vecs:
        raise DomainError("empty basis")
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if vecs[i].summands[0][1].comp != vecs[j].summands[0][1].comp:
                continue
            sv = s_vector(vecs[i], vecs[j], key, ctx.field)
            if not remainder(sv, vecs, order, ctx).is_zero():
                return False
    return True


@dataclass
class InhomResult:
    """Outcome of the homogenize / saturating-run / dehomogenize pipeline."""

    reduced: list[ModuleVector]
    homogeneous: GBResult
    hctx: RingContext


def compute_inhom_gb(
    vs,
    spec: OrderSpec,
    ctx: RingContext,
    cfg: StrategyConfig,
    *,
    deadline: float | None = None,
    want_transcript: bool = False,
) -> InhomResult:
    """Homogenize the generators, run a saturating variant, dehomogenize and
    interreduce: the result is the reduced Groebner basis of the input."""
    if cfg.remainder_mode not in ("weaksat", "selfsat"):
        raise DomainError("the inhomogeneous pipeline needs a saturating remainder mode")
    if ctx.m != 0:
        raise StructureError("input context must be unhomogenized")
    hctx = homogenized_context(ctx)
    ext = extend_order(spec, ctx.grading)
    hkey = ext.key_func(hctx)
    gens = homogenize_generators([v for v in vs if not v.is_zero()], hctx, hkey)
    res = buchberger(
        gens, ext, hctx, cfg, deadline=deadline, want_transcript=want_transcript
    )
    pkey = spec.key_func(ctx)
    from .homog import dehomogenize

    deh = [dehomogenize(b.vector, ctx, pkey) for b in res.basis]
    reduced = interreduce(deh, spec, ctx)
    return InhomResult(reduced=reduced, homogeneous=res, hctx=hctx)


def render_transcript(events, ctx: RingContext) -> str:
    """Line-oriented serialization of a run's event log."""
    lines = []
    for ev in events:
        kind = ev[0]
        if kind == "GEN":
            lines.append(f"GEN {ev[1]}")
        elif kind == "PAIR":
            lines.append(f"PAIR {ev[1]} {ev[2]}")
        elif kind == "REDSTEP":
            lines.append(f"REDSTEP {ev[1]} {format_exps(ev[2], ctx)}")
        elif kind == "SAT":
            lines.append("SAT " + ",".join(str(v) for v in ev[1]))
        elif kind == "ADD":
            lines.append(f"ADD {ev[1]} SUGAR " + ",".join(str(v) for v in ev[2]))
        else:
            raise StructureError(f"unknown event {ev!r}")
    return "\n".join(lines) + ("\n" if lines else "")
