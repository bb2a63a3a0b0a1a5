"""Pure-numpy fallback kernels.

Each output element accumulates its terms in the same
(in-channel, kernel-row, kernel-col) order as the compiled core, one
rounding per multiply and per add in the array's own dtype, so results
are bit-identical to the extension. Spatial work is vectorized; the
term loops stay explicit to preserve the ordering.
"""

import numpy as np


def conv2d(xp, w, bias, has_bias, out, groups, stride):
    cout, cing, kh, kw = w.shape
    ho, wo = out.shape[2], out.shape[3]
    cpg = cout // groups
    for g in range(groups):
        for co in range(g * cpg, (g + 1) * cpg):
            acc = out[:, co]
            for ic in range(cing):
                ica = g * cing + ic
                for ky in range(kh):
                    for kx in range(kw):
                        acc += w[co, ic, ky, kx] * xp[
                            :, ica,
                            ky:ky + (ho - 1) * stride + 1:stride,
                            kx:kx + (wo - 1) * stride + 1:stride]
            if has_bias:
                acc += bias[co]


def _dpw_patch(xp, w, bias, has_bias, out, groups, ph, pw, pi, pj):
    cout, cing, kh, kw = w.shape[:4]
    cpg = cout // groups
    y0, x0 = pi * ph, pj * pw
    xsl = xp[:, :, y0:y0 + ph + kh - 1, x0:x0 + pw + kw - 1]
    osl = out[:, :, y0:y0 + ph, x0:x0 + pw]
    for g in range(groups):
        for co in range(g * cpg, (g + 1) * cpg):
            acc = osl[:, co]
            for ic in range(cing):
                ica = g * cing + ic
                for ky in range(kh):
                    for kx in range(kw):
                        acc += w[co, ic, ky, kx, pi, pj] * xsl[
                            :, ica, ky:ky + ph, kx:kx + pw]
            if has_bias:
                acc += bias[co, pi, pj]


def dpw_naive(xp, w, bias, has_bias, out, groups, ph, pw):
    nh, nw = w.shape[4], w.shape[5]
    for pi in range(nh):
        for pj in range(nw):
            _dpw_patch(xp, w, bias, has_bias, out, groups, ph, pw, pi, pj)


def dpw_tiled_range(xp, w, bias, has_bias, out, groups, ph, pw, lo, hi):
    nw = w.shape[5]
    for p in range(lo, hi):
        _dpw_patch(xp, w, bias, has_bias, out, groups, ph, pw, p // nw, p % nw)


def dpw_backward(xp, w, gout, gxp, gw, gb, has_bias, groups, ph, pw):
    cout, cing, kh, kw, nh, nw = w.shape
    cpg = cout // groups
    acc = np.float64 if xp.dtype == np.float64 else np.float32
    for p in range(nh * nw):
        pi, pj = p // nw, p % nw
        y0, x0 = pi * ph, pj * pw
        go = gout[:, :, y0:y0 + ph, x0:x0 + pw]
        xsl = xp[:, :, y0:y0 + ph + kh - 1, x0:x0 + pw + kw - 1]
        gxsl = gxp[:, :, y0:y0 + ph + kh - 1, x0:x0 + pw + kw - 1]
        for g in range(groups):
            for co in range(g * cpg, (g + 1) * cpg):
                gco = go[:, co]
                if has_bias:
                    gb[co, pi, pj] += np.sum(gco, dtype=acc)
                for ic in range(cing):
                    ica = g * cing + ic
                    for ky in range(kh):
                        for kx in range(kw):
                            win = xsl[:, ica, ky:ky + ph, kx:kx + pw]
                            gw[co, ic, ky, kx, pi, pj] += np.sum(
                                gco * win, dtype=acc)
                            gxsl[:, ica, ky:ky + ph, kx:kx + pw] += (
                                w[co, ic, ky, kx, pi, pj] * gco)
