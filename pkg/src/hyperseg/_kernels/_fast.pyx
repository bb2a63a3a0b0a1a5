# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Hot kernels: static convolution and the patch-wise dynamic convolution.

All kernels receive the input already zero-padded and accumulate each
output element in the fixed (in-channel, kernel-row, kernel-col) term
order, in the array's own dtype, with the bias added last. The pure-python
fallback follows the same order, so the two backends agree bit for bit.
"""

from libc.stdlib cimport free, malloc

cimport cython

ctypedef fused real:
    float
    double


def conv2d(real[:, :, :, ::1] xp, real[:, :, :, ::1] w, real[::1] bias,
           bint has_bias, real[:, :, :, ::1] out, Py_ssize_t groups,
           Py_ssize_t stride):
    cdef Py_ssize_t n = xp.shape[0]
    cdef Py_ssize_t cout = w.shape[0], cing = w.shape[1]
    cdef Py_ssize_t kh = w.shape[2], kw = w.shape[3]
    cdef Py_ssize_t ho = out.shape[2], wo = out.shape[3]
    cdef Py_ssize_t cpg = cout // groups
    cdef Py_ssize_t b, g, co, ic, ica, oy, ox, ky, kx, y0, x0
    cdef real acc, wv

    with nogil:
        for b in range(n):
            for g in range(groups):
                for co in range(g * cpg, (g + 1) * cpg):
                    for oy in range(ho):
                        y0 = oy * stride
                        for ox in range(wo):
                            x0 = ox * stride
                            acc = 0
                            for ic in range(cing):
                                ica = g * cing + ic
                                for ky in range(kh):
                                    for kx in range(kw):
                                        wv = w[co, ic, ky, kx]
                                        acc = acc + wv * xp[b, ica, y0 + ky, x0 + kx]
                            if has_bias:
                                acc = acc + bias[co]
                            out[b, co, oy, ox] = acc


def dpw_naive(real[:, :, :, ::1] xp, real[:, :, :, :, :, ::1] w,
              real[:, :, ::1] bias, bint has_bias, real[:, :, :, ::1] out,
              Py_ssize_t groups, Py_ssize_t ph, Py_ssize_t pw):
    cdef Py_ssize_t n = xp.shape[0]
    cdef Py_ssize_t cout = w.shape[0], cing = w.shape[1]
    cdef Py_ssize_t kh = w.shape[2], kw = w.shape[3]
    cdef Py_ssize_t ho = out.shape[2], wo = out.shape[3]
    cdef Py_ssize_t cpg = cout // groups
    cdef Py_ssize_t b, g, co, ic, ica, oy, ox, ky, kx, pi, pj
    cdef real acc, wv

    with nogil:
        for b in range(n):
            for g in range(groups):
                for co in range(g * cpg, (g + 1) * cpg):
                    for oy in range(ho):
                        pi = oy // ph
                        for ox in range(wo):
                            pj = ox // pw
                            acc = 0
                            for ic in range(cing):
                                ica = g * cing + ic
                                for ky in range(kh):
                                    for kx in range(kw):
                                        wv = w[co, ic, ky, kx, pi, pj]
                                        acc = acc + wv * xp[b, ica, oy + ky, ox + kx]
                            if has_bias:
                                acc = acc + bias[co, pi, pj]
                            out[b, co, oy, ox] = acc


def dpw_tiled_range(real[:, :, :, ::1] xp, real[:, :, :, :, :, ::1] w,
                    real[:, :, ::1] bias, bint has_bias,
                    real[:, :, :, ::1] out, Py_ssize_t groups,
                    Py_ssize_t ph, Py_ssize_t pw,
                    Py_ssize_t lo, Py_ssize_t hi):
    """Processes patches [lo, hi) in raster order with the patch kernel
    staged in a contiguous hot buffer. Output pixels are disjoint per
    patch, so ranges can run on any number of threads unchanged."""
    cdef Py_ssize_t n = xp.shape[0]
    cdef Py_ssize_t cout = w.shape[0], cing = w.shape[1]
    cdef Py_ssize_t kh = w.shape[2], kw = w.shape[3]
    cdef Py_ssize_t nw = w.shape[5]
    cdef Py_ssize_t cpg = cout // groups
    cdef Py_ssize_t p, pi, pj, b, g, co, ic, ica, py, px, oy, ox, ky, kx, idx
    cdef real acc
    cdef real *kbuf
    cdef real *bbuf

    kbuf = <real *> malloc(cout * cing * kh * kw * sizeof(real))
    bbuf = <real *> malloc(cout * sizeof(real))
    if kbuf == NULL or bbuf == NULL:
        free(kbuf)
        free(bbuf)
        raise MemoryError()

    with nogil:
        for p in range(lo, hi):
            pi = p // nw
            pj = p % nw
            idx = 0
            for co in range(cout):
                for ic in range(cing):
                    for ky in range(kh):
                        for kx in range(kw):
                            kbuf[idx] = w[co, ic, ky, kx, pi, pj]
                            idx += 1
                if has_bias:
                    bbuf[co] = bias[co, pi, pj]
            for b in range(n):
                for g in range(groups):
                    for co in range(g * cpg, (g + 1) * cpg):
                        for py in range(ph):
                            oy = pi * ph + py
                            for px in range(pw):
                                ox = pj * pw + px
                                acc = 0
                                idx = co * cing * kh * kw
                                for ic in range(cing):
                                    ica = g * cing + ic
                                    for ky in range(kh):
                                        for kx in range(kw):
                                            acc = acc + kbuf[idx] * xp[b, ica, oy + ky, ox + kx]
                                            idx += 1
                                if has_bias:
                                    acc = acc + bbuf[co]
                                out[b, co, oy, ox] = acc

    free(kbuf)
    free(bbuf)


def dpw_backward(real[:, :, :, ::1] xp, real[:, :, :, :, :, ::1] w,
                 real[:, :, :, ::1] gout, real[:, :, :, ::1] gxp,
                 real[:, :, :, :, :, ::1] gw, real[:, :, ::1] gb,
                 bint has_bias, Py_ssize_t groups,
                 Py_ssize_t ph, Py_ssize_t pw):
    """Vector-Jacobian product of dpw forward; serial, patches in raster
    order so the halo contributions to gxp combine deterministically."""
    cdef Py_ssize_t n = xp.shape[0]
    cdef Py_ssize_t cout = w.shape[0], cing = w.shape[1]
    cdef Py_ssize_t kh = w.shape[2], kw = w.shape[3]
    cdef Py_ssize_t nh = w.shape[4], nw = w.shape[5]
    cdef Py_ssize_t cpg = cout // groups
    cdef Py_ssize_t p, pi, pj, b, g, co, ic, ica, py, px, oy, ox, ky, kx
    cdef real gv

    with nogil:
        for p in range(nh * nw):
            pi = p // nw
            pj = p % nw
            for b in range(n):
                for g in range(groups):
                    for co in range(g * cpg, (g + 1) * cpg):
                        for py in range(ph):
                            oy = pi * ph + py
                            for px in range(pw):
                                ox = pj * pw + px
                                gv = gout[b, co, oy, ox]
                                if has_bias:
                                    gb[co, pi, pj] = gb[co, pi, pj] + gv
                                for ic in range(cing):
                                    ica = g * cing + ic
                                    for ky in range(kh):
                                        for kx in range(kw):
                                            gw[co, ic, ky, kx, pi, pj] = (
                                                gw[co, ic, ky, kx, pi, pj]
                                                + gv * xp[b, ica, oy + ky, ox + kx])
                                            gxp[b, ica, oy + ky, ox + kx] = (
                                                gxp[b, ica, oy + ky, ox + kx]
                                                + gv * w[co, ic, ky, kx, pi, pj])
