#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Independent reference values frozen into the C++ unit tests.

Uses colorspacious (an independent CIECAM02 / CAM02-UCS implementation) with
its viewing conditions patched to match the library defaults: full adaptation
(D = 1), the sRGB-matrix white, and row-normalized HPE matrix. Run with
`python3 tests/oracles/reference_values.py`; requires numpy and colorspacious.
"""

import numpy as np
import colorspacious
from colorspacious import basics, ciecam02, luoetal2006

SRGB_TO_XYZ = np.array([[0.4124, 0.3576, 0.1805],
                        [0.2126, 0.7152, 0.0722],
                        [0.0193, 0.1192, 0.9505]])
basics.sRGB1_to_XYZ100_matrix = SRGB_TO_XYZ
basics.XYZ100_to_sRGB1_matrix = np.linalg.inv(SRGB_TO_XYZ)

hpe = ciecam02.M_HPE.copy()
hpe = hpe / hpe.sum(axis=1, keepdims=True)
ciecam02.M_HPE = hpe
ciecam02.M_HPE_M_CAT02_inv = hpe @ np.linalg.inv(ciecam02.M_CAT02)
ciecam02.M_CAT02_M_HPE_inv = ciecam02.M_CAT02 @ np.linalg.inv(hpe)


def make_space():
    white = SRGB_TO_XYZ.sum(axis=1) * 100
    s = ciecam02.CIECAM02Space(white, 20.0, 64 / np.pi / 5)
    s.D = 1.0
    s.D_RGB = s.D * s.XYZ100_w[1] / s.RGB_w + 1 - s.D
    s.RGB_wc = s.D_RGB * s.RGB_w
    s.RGBprime_w = ciecam02.M_HPE_M_CAT02_inv @ s.RGB_wc
    tmp = ((s.F_L * s.RGBprime_w) / 100) ** 0.42
    s.RGBprime_aw = 400 * (tmp / (tmp + 27.13)) + 0.1
    s.A_w = (np.dot([2, 1, 1. / 20], s.RGBprime_aw) - 0.305) * s.N_bb
    return s


SPACE = make_space()


def srgb_to_jab(rgb):
    lin = basics.sRGB1_to_sRGB1_linear(np.asarray(rgb, dtype=float))
    xyz = basics.sRGB1_linear_to_XYZ100(lin)
    cam = SPACE.XYZ100_to_CIECAM02(xyz)
    return luoetal2006.CAM02UCS.JMh_to_Jpapbp([cam.J, cam.M, cam.h])


def main():
    np.set_printoptions(precision=12)
    print("srgb_to_linear(0.5) =", repr(float(basics.C_linear(np.array([0.5]))[0])))
    for rgb in ([1, 1, 1], [0, 0, 0], [0.5, 0.2, 0.8], [0.25, 0.5, 0.75],
                [0.9, 0.8, 0.1], [0.5, 0.5, 0.5], [-0.038, 0.3, 0.2]):
        print("jab", rgb, "->", ", ".join(repr(float(v)) for v in srgb_to_jab(rgb)))

    # CIE 159 worked-example stimulus, CIE formula for D (no patching of D).
    cie = ciecam02.CIECAM02Space([98.88, 90.0, 32.03], 18.0, 200.0)
    cam = cie.XYZ100_to_CIECAM02([19.31, 23.93, 10.14])
    print("cie159 J, M, h =", repr(float(cam.J)), repr(float(cam.M)), repr(float(cam.h)))

    from colorspacious.cvd import machado_et_al_2009_matrix
    for kind, sev, rgb in (("deuteranomaly", 100, [1.0, 0.0, 0.0]),
                           ("deuteranomaly", 50, [0.2, 0.6, 0.4]),
                           ("protanomaly", 100, [0.2, 0.6, 0.4]),
                           ("tritanomaly", 100, [0.2, 0.6, 0.4]),
                           ("protanomaly", 35, [0.9, 0.3, 0.1])):
        m = machado_et_al_2009_matrix(kind, sev)
        lin = basics.C_linear(np.array(rgb))
        sim = np.clip(m @ lin, 0, 1)
        print("cvd", kind, sev, rgb, "->", ", ".join(repr(float(v)) for v in basics.C_srgb(sim)))


if __name__ == "__main__":
    main()


def gamut_fraction(kind, severity, resolution):
    """Distinct 8-bit outputs over distinct 8-bit inputs on a resolution^3 lattice."""
    from colorspacious.cvd import machado_et_al_2009_matrix
    axis = np.arange(resolution) / (resolution - 1)
    grid = np.stack(np.meshgrid(axis, axis, axis, indexing="ij"), axis=-1).reshape(-1, 3)

    def quantize(rgb):
        q = np.floor(np.clip(rgb, 0, 1) * 255 + 0.5).astype(np.int64)
        return np.unique(q[:, 0] * 65536 + q[:, 1] * 256 + q[:, 2]).size

    lin = basics.C_linear(grid)
    sim = np.clip(lin @ machado_et_al_2009_matrix(kind, severity).T, 0, 1)
    return quantize(basics.C_srgb(sim)) / quantize(grid)


if __name__ == "__main__":
    for kind in ("deuteranomaly", "protanomaly", "tritanomaly"):
        for res in (16, 64):
            print("gamut", kind, res,
                  ", ".join(repr(gamut_fraction(kind, s, res)) for s in range(0, 101, 10)))
