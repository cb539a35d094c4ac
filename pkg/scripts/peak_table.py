"""Peak height, peak position and FWHM of the PCD panels, relative to the coherent panel."""

from jclab.presets import list_presets
from jclab.states import pcd
from jclab.stats import g2_zero, moments, peak_and_width


def main():
    base = {}
    print(f"{'preset':<8}{'order':<6}{'(N_C,N_S,N_th)':<16}{'n_pk':>5}{'P_pk':>9}{'ratio':>7}{'FWHM':>8}{'<n>':>9}{'G2(0)':>8}")
    for p in list_presets():
        if p.kind != "pcd":
            continue
        dist = pcd(p.field())
        k, peak, width = peak_and_width(dist)
        if p.n_s == 0 and p.n_th == 0:
            base[p.n_c] = peak
        ratio = peak / base[p.n_c] if p.n_c in base else float("nan")
        triple = f"({p.n_c:g},{p.n_s:g},{p.n_th:g})"
        print(f"{p.id:<8}{p.ordering.value:<6}{triple:<16}{k:>5}{peak:>9.5f}{ratio:>7.3f}"
              f"{width:>8.2f}{moments(dist)[0]:>9.3f}{g2_zero(dist):>8.4f}")


if __name__ == "__main__":
    main()
