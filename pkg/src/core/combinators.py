from src.core.pregame import Interface, Pregame
from src.finite import FinFun
from src.utils.errors import InterfaceMismatch


def compose(h: Pregame, g: Pregame) -> Pregame:
    """
    h ∘ g（先 g 后 h）。策略分量扁平拼接，g 在前
    k' y = C_h σ2 (y, k (P_h σ2 y))
    """
    if g.codomain != h.domain:
        raise InterfaceMismatch(
            f"cannot compose: codomain {g.codomain.render()} of {g.description} "
            f"does not match domain {h.domain.render()} of {h.description}",
            g.codomain.render(), h.domain.render(),
        )
    n1 = len(g.strategy_components)
    middle = g.codomain

    def play(sigma, x):
        return h.play(sigma[n1:], g.play(sigma[:n1], x))

    def coplay(sigma, x, r):
        sigma1, sigma2 = sigma[:n1], sigma[n1:]
        return g.coplay(sigma1, x, h.coplay(sigma2, g.play(sigma1, x), r))

    def rational(sigma, x, k):
        sigma1, sigma2 = sigma[:n1], sigma[n1:]
        k_prime = FinFun.from_callable(
            middle.cov, middle.contra,
            lambda y: h.coplay(sigma2, y, k(h.play(sigma2, y))),
            check=False,
        )
        return (g.rational(sigma1, x, k_prime)
                and h.rational(sigma2, g.play(sigma1, x), k))

    return Pregame(
        domain=g.domain,
        codomain=h.codomain,
        strategy_components=g.strategy_components + h.strategy_components,
        play=play,
        coplay=coplay,
        rational=rational,
        description=f"({g.description} ; {h.description})",
    )


def tensor(g: Pregame, h: Pregame) -> Pregame:
    """
    g ⊗ h：接口逐分量拼接，play/coplay 逐分量
    k1 固定 h 的输出并取前半部分，k2 固定 g 的输出并取后半部分
    """
    n1 = len(g.strategy_components)
    dx = len(g.domain.cov)
    dr = len(g.codomain.contra)

    def play(sigma, x):
        return g.play(sigma[:n1], x[:dx]) + h.play(sigma[n1:], x[dx:])

    def coplay(sigma, x, r):
        return g.coplay(sigma[:n1], x[:dx], r[:dr]) + h.coplay(sigma[n1:], x[dx:], r[dr:])

    def rational(sigma, x, k):
        sigma1, sigma2 = sigma[:n1], sigma[n1:]
        x1, x2 = x[:dx], x[dx:]
        y1 = g.play(sigma1, x1)
        y2 = h.play(sigma2, x2)
        k1 = FinFun.from_callable(g.codomain.cov, g.codomain.contra,
                                  lambda a: k(a + y2)[:dr], check=False)
        if not g.rational(sigma1, x1, k1):
            return False
        k2 = FinFun.from_callable(h.codomain.cov, h.codomain.contra,
                                  lambda b: k(y1 + b)[dr:], check=False)
        return h.rational(sigma2, x2, k2)

    return Pregame(
        domain=g.domain.tensor(h.domain),
        codomain=g.codomain.tensor(h.codomain),
        strategy_components=g.strategy_components + h.strategy_components,
        play=play,
        coplay=coplay,
        rational=rational,
        description=f"({g.description} || {h.description})",
    )
