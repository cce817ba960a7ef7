"""Transfer along the bicharacter attached to the signed bijection.

The bicharacter sums block characters against their wreath images.  Its two
convolution transforms recover the bijection on block class functions and
kill the other blocks; it separates classes whose p-multiplied cycle data
disagree; and it carries the block's projective lattice onto the span of
the principal projective tuples.  All checks run classwise over exact
rationals; the valuation probe only reports, since the divisibility half
genuinely fails once the weight reaches p.
"""

from __future__ import annotations

from fractions import Fraction

from .isometry import isometry_image, isometry_row
from .lattice import hnf_basis, kernel_lattice, lattice_equal
from .modular import principal_gibr_filter, enumerate_gibr, zeta_projective
from .partitions import Partition, enumerate_partitions, format_partition, v_p
from .reporting import Report
from .symchar import (
    SnClassFunction,
    centralizer_order_sn,
    inner_product,
    irr_class_function,
    irr_in_block,
)
from .wreath import (
    WreathClassFunction,
    centralizer_order_wreath,
    embed_to_sn,
    enumerate_irr_wreath,
    enumerate_wreath_classes,
    principal_block_filter,
    tp_wr,
    wreath_inner_product,
    zeta_irr,
)


def tp_p(tau: Partition, p: int) -> Partition:
    """The p-divisible parts of tau, divided by p."""
    return tuple(x // p for x in tau if x % p == 0)


def p_part_decomposition(tau: Partition, p: int) -> tuple[Partition, Partition]:
    """Split a cycle type into p-divisible and p-regular parts."""
    div = tuple(x for x in tau if x % p == 0)
    reg = tuple(x for x in tau if x % p)
    return div, reg


def label_p_regular(label, p: int) -> bool:
    """Whether the label's embedded cycle type has no p-divisible part."""
    return all(x % p for x in embed_to_sn(label))


def build_mu(p: int, w: int, rho: Partition):
    """Matrix of the bicharacter over (big class, wreath label)."""
    n = p * w + sum(rho)
    classes = enumerate_partitions(n)
    labels = enumerate_wreath_classes(p, w)
    rows = [[0] * len(labels) for _ in classes]
    for lam in irr_in_block(n, p, rho):
        image = isometry_image(lam, rho, p)
        for i, tau in enumerate(classes):
            from .symchar import character_value

            a = character_value(lam, tau)
            if a:
                for j in range(len(labels)):
                    rows[i][j] += a * image.values[j]
    return rows


def R_mu(mu_rows, xi: SnClassFunction, p: int, w: int) -> WreathClassFunction:
    """Transfer a big-group class function to the wreath product."""
    classes = enumerate_partitions(xi.n)
    labels = enumerate_wreath_classes(p, w)
    values = []
    for j in range(len(labels)):
        total = Fraction(0)
        for i, tau in enumerate(classes):
            total += Fraction(mu_rows[i][j]) * Fraction(xi.values[i], centralizer_order_sn(tau))
        values.append(total)
    return WreathClassFunction(p, w, tuple(values))


def I_mu(mu_rows, theta: WreathClassFunction, n: int) -> SnClassFunction:
    """Transfer a wreath class function back to the big group."""
    classes = enumerate_partitions(n)
    labels = enumerate_wreath_classes(theta.p, theta.w)
    values = []
    for i in range(len(classes)):
        total = Fraction(0)
        for j, lbl in enumerate(labels):
            total += Fraction(mu_rows[i][j]) * Fraction(
                theta.values[j], centralizer_order_wreath(lbl, theta.p)
            )
        values.append(total)
    return SnClassFunction(n, tuple(values))


def in_L_lambda_sn(xi: SnClassFunction, lam: Partition, p: int) -> bool:
    """Vanishing off the classes whose p-multiplied data equals lam."""
    return all(
        v == 0
        for tau, v in zip(enumerate_partitions(xi.n), xi.values)
        if tp_p(tau, p) != lam
    )


def in_L_lambda_wreath(theta: WreathClassFunction, lam: Partition) -> bool:
    return all(
        v == 0
        for lbl, v in zip(enumerate_wreath_classes(theta.p, theta.w), theta.values)
        if tp_wr(lbl, theta.p) != lam
    )


def wreath_block_projection(theta: WreathClassFunction) -> WreathClassFunction:
    """Projection onto the span of the principal wreath irreducibles."""
    p, w = theta.p, theta.w
    out = WreathClassFunction(p, w, (Fraction(0),) * len(theta.values))
    for phi in principal_block_filter(enumerate_irr_wreath(p, w), p):
        z = zeta_irr(p, w, phi)
        c = wreath_inner_product(theta, z)
        if c:
            out = out + z.scaled(c)
    return out


def verify_transfer(p: int, w: int, rho: Partition) -> Report:
    """The transforms restrict to the bijection and its inverse, and kill
    class functions orthogonal to the blocks."""
    rep = Report("transfer")
    n = p * w + sum(rho)
    mu_rows = build_mu(p, w, rho)
    core_txt = format_partition(rho)
    block = irr_in_block(n, p, rho)
    for lam in block:
        got = R_mu(mu_rows, irr_class_function(lam), p, w)
        want = isometry_image(lam, rho, p)
        rep.add(
            {"p": p, "w": w, "core": core_txt, "lambda": format_partition(lam), "map": "forward"},
            tuple(got.values) == tuple(Fraction(v) for v in want.values),
        )
    for lam in enumerate_partitions(n):
        if lam in block:
            continue
        got = R_mu(mu_rows, irr_class_function(lam), p, w)
        rep.add(
            {"p": p, "w": w, "core": core_txt, "lambda": format_partition(lam), "map": "kill"},
            got.is_zero(),
        )
    for phi in principal_block_filter(enumerate_irr_wreath(p, w), p):
        theta = zeta_irr(p, w, phi)
        got = I_mu(mu_rows, theta, n)
        sign, lam = _preimage(p, w, rho, phi)
        want = irr_class_function(lam).scaled(sign)
        rep.add(
            {"p": p, "w": w, "core": core_txt, "phi": _phi_text(phi), "map": "inverse"},
            tuple(got.values) == tuple(Fraction(v) for v in want.values),
        )
    return rep


def _preimage(p: int, w: int, rho: Partition, phi):
    for lam in irr_in_block(p * w + sum(rho), p, rho):
        sign, psi = isometry_row(lam, rho, p)
        from .wreath import lambda_psi

        if lambda_psi(psi, p) == phi:
            return sign, lam
    raise ValueError("assignment outside the principal image")


def verify_sep(p: int, w: int, rho: Partition) -> Report:
    """The bicharacter vanishes whenever the p-multiplied data disagree."""
    rep = Report("sep")
    n = p * w + sum(rho)
    mu_rows = build_mu(p, w, rho)
    classes = enumerate_partitions(n)
    labels = enumerate_wreath_classes(p, w)
    for i, tau in enumerate(classes):
        for j, lbl in enumerate(labels):
            if tp_p(tau, p) == tp_wr(lbl, p):
                continue
            ok = mu_rows[i][j] == 0
            rep.add(
                {
                    "p": p,
                    "w": w,
                    "core": format_partition(rho),
                    "class": format_partition(tau),
                    "label": _label_text(lbl),
                },
                ok,
                None if ok else {"mu": mu_rows[i][j]},
            )
    return rep


def verify_type(p: int, w: int, rho: Partition) -> Report:
    """Transfer preserves the stratification by p-multiplied data."""
    from .symchar import block_projection

    rep = Report("type")
    n = p * w + sum(rho)
    mu_rows = build_mu(p, w, rho)
    classes = enumerate_partitions(n)
    labels = enumerate_wreath_classes(p, w)
    core_txt = format_partition(rho)
    for m in range(w + 1):
        for lam in enumerate_partitions(m):
            for i, tau in enumerate(classes):
                if tp_p(tau, p) != lam:
                    continue
                indicator = SnClassFunction(
                    n, tuple(int(k == i) for k in range(len(classes)))
                )
                xi = block_projection(indicator, p, rho)
                if not in_L_lambda_sn(xi, lam, p):
                    rep.add(
                        {"p": p, "w": w, "core": core_txt, "type": format_partition(lam),
                         "class": format_partition(tau), "side": "projection"},
                        False,
                    )
                    continue
                image = R_mu(mu_rows, xi, p, w)
                rep.add(
                    {"p": p, "w": w, "core": core_txt, "type": format_partition(lam),
                     "class": format_partition(tau), "side": "forward"},
                    in_L_lambda_wreath(image, lam),
                )
            for j, lbl in enumerate(labels):
                if tp_wr(lbl, p) != lam:
                    continue
                indicator = WreathClassFunction(
                    p, w, tuple(int(k == j) for k in range(len(labels)))
                )
                theta = wreath_block_projection(indicator)
                image = I_mu(mu_rows, theta, n)
                rep.add(
                    {"p": p, "w": w, "core": core_txt, "type": format_partition(lam),
                     "label": _label_text(lbl), "side": "backward"},
                    in_L_lambda_sn(image, lam, p),
                )
    return rep


def block_projective_lattice(p: int, w: int, rho: Partition):
    """Integer combinations of block irreducibles vanishing p-singularly.

    Returned as coefficient rows over the block's canonical label list.
    """
    n = p * w + sum(rho)
    block = irr_in_block(n, p, rho)
    singular = [tau for tau in enumerate_partitions(n) if tp_p(tau, p) != ()]
    from .symchar import character_value

    matrix = [[character_value(lam, tau) for tau in singular] for lam in block]
    return kernel_lattice(matrix)


def verify_perfproj(p: int, w: int, rho: Partition) -> Report:
    """Transfer matches the block projective lattice with the span of the
    principal projective tuples, as lattices of wreath coefficients."""
    rep = Report("perfproj")
    n = p * w + sum(rho)
    block = irr_in_block(n, p, rho)
    irr_wr = enumerate_irr_wreath(p, w)
    idx = {phi: i for i, phi in enumerate(irr_wr)}
    from .wreath import lambda_psi

    image_rows = []
    for coeff_row in block_projective_lattice(p, w, rho):
        vec = [0] * len(irr_wr)
        for c, lam in zip(coeff_row, block):
            if c:
                sign, psi = isometry_row(lam, rho, p)
                vec[idx[lambda_psi(psi, p)]] += c * sign
        image_rows.append(vec)

    proj_rows = []
    principal = principal_gibr_filter(enumerate_gibr(p, w), p)
    for psi in principal:
        hat = zeta_projective(p, w, psi)
        vec = []
        ok_support = True
        for phi in irr_wr:
            c = wreath_inner_product(hat, zeta_irr(p, w, phi))
            if c.denominator != 1:
                raise AssertionError("projective tuple has fractional coefficients")
            c = int(c)
            if c and not _is_principal(phi, p):
                ok_support = False
            vec.append(c)
        rep.add(
            {"p": p, "w": w, "psi": _phi_text(psi), "support": "principal"},
            ok_support,
        )
        proj_rows.append(vec)

    same = lattice_equal(hnf_basis(image_rows) if image_rows else [], proj_rows)
    rep.add(
        {
            "p": p,
            "w": w,
            "core": format_partition(rho),
            "rank_image": len(hnf_basis(image_rows)) if image_rows else 0,
            "rank_projective": len(hnf_basis(proj_rows)),
        },
        same,
    )
    return rep


def _is_principal(phi, p: int) -> bool:
    from .abacus import is_hook

    return all(not mu or is_hook(kappa) for kappa, mu in zip(enumerate_partitions(p), phi))


def perfectness_probe(p: int, w: int, rho: Partition) -> Report:
    """Valuation and regularity report on the bicharacter; never a failure.

    The separation half always holds here; the divisibility half is
    expected only while w < p, so both are reported with expectations
    rather than asserted outright.
    """
    rep = Report("probe")
    n = p * w + sum(rho)
    mu_rows = build_mu(p, w, rho)
    classes = enumerate_partitions(n)
    labels = enumerate_wreath_classes(p, w)
    divisibility_bad = []
    regularity_bad = []
    for i, tau in enumerate(classes):
        for j, lbl in enumerate(labels):
            m = mu_rows[i][j]
            g_regular = all(x % p for x in tau)
            h_regular = label_p_regular(lbl, p)
            if m != 0 and g_regular != h_regular:
                regularity_bad.append((tau, lbl))
            if m != 0:
                vm = v_p(m, p)
                if vm < v_p(centralizer_order_sn(tau), p) or vm < v_p(
                    centralizer_order_wreath(lbl, p), p
                ):
                    divisibility_bad.append((tau, lbl))
    rep.add(
        {
            "p": p,
            "w": w,
            "core": format_partition(rho),
            "criterion": "regularity",
            "violations": len(regularity_bad),
        },
        True,
        {"examples": [_pair_text(x) for x in regularity_bad[:3]]} if regularity_bad else None,
    )
    rep.add(
        {
            "p": p,
            "w": w,
            "core": format_partition(rho),
            "criterion": "divisibility",
            "violations": len(divisibility_bad),
            "expected_perfect": w < p,
        },
        True,
        {"examples": [_pair_text(x) for x in divisibility_bad[:3]]} if divisibility_bad else None,
    )
    return rep


def probe_is_perfect(rep: Report) -> bool:
    return all(r["parameters"]["violations"] == 0 for r in rep.records)


def _label_text(label) -> str:
    return ",".join(f"{k}:{format_partition(c)}" for k, c in label)


def _pair_text(pair) -> dict:
    tau, lbl = pair
    return {"class": format_partition(tau), "label": _label_text(lbl)}


def _phi_text(phi) -> str:
    return ";".join(format_partition(mu) for mu in phi)
