"""Independent high-precision oracle for the frozen test constants.

Uses mpmath matrices directly (no closed forms from the C++ library):
E is assembled by explicit block algebra, fidelities by determinants,
symplectic eigenvalues by eigen-solving i*Omega*V.
Run: python3 tests/oracle/frozen_values.py
"""
import mpmath as mp

mp.mp.dps = 40
I2 = mp.eye(2)
Z = mp.matrix([[1, 0], [0, -1]])


def blocks(V):
    A = V[0:2, 0:2]
    C = V[0:2, 2:4]
    B = V[2:4, 2:4]
    return A, B, C


def assemble(A, B, C):
    V = mp.zeros(4, 4)
    for i in range(2):
        for j in range(2):
            V[i, j] = A[i, j]
            V[i + 2, j + 2] = B[i, j]
            V[i, j + 2] = C[i, j]
            V[j + 2, i] = C[i, j]
    return V


def attenuate(V, ta, tb):
    L = mp.diag([ta, ta, tb, tb])
    return L * (V - mp.eye(4)) * L + mp.eye(4)


def E_of(V, g):
    A, B, C = blocks(V)
    return (1 + g**2) * I2 + g**2 * Z * A * Z.T - g * (Z * C + C.T * Z.T) + B


def fid(V, ta, tb, g):
    return 2 / mp.sqrt(mp.det(E_of(attenuate(V, ta, tb), g)))


def sympl(V):
    Om = mp.zeros(4, 4)
    Om[0, 1] = 1; Om[1, 0] = -1; Om[2, 3] = 1; Om[3, 2] = -1
    ev = mp.eig(Om * V)[0]
    return sorted(set(round(float(abs(e.imag)), 12) for e in ev))


def ptranspose(V):
    P = mp.diag([1, 1, 1, -1])
    return P * V * P


def tmss(r):
    c, s = mp.cosh(2 * r), mp.sinh(2 * r)
    return assemble(mp.diag([c, c]), mp.diag([c, c]), mp.diag([s, -s]))


eq32 = assemble(mp.diag([2.1, 2.6]), mp.diag([2.2, 2.4]), mp.diag([1.9, -0.7]))
vac = mp.eye(4)
T = tmss(1)

print("cosh2 sinh2", mp.cosh(2), mp.sinh(2))
print("F tmss", fid(T, 1, 1, 1), "F vac", fid(vac, 1, 1, 1), "F eq32", fid(eq32, 1, 1, 1))
print("F tmss ta=.5", fid(T, 0.5, 1, 1), "E", E_of(attenuate(T, 0.5, 1), 1)[0, 0])
print("F tmss ta=.2", fid(T, 0.2, 1, 1), "E", E_of(attenuate(T, 0.2, 1), 1)[0, 0])
print("F eq32 (1,.3)", fid(eq32, 1, 0.3, 1))
print("E tmss", E_of(T, 1)[0, 0], "detE", mp.det(E_of(T, 1)))
print("att tmss .5:", attenuate(T, 0.5, 1)[0, 0], attenuate(T, 0.5, 1)[0, 2])
print("sympl eq32", sympl(eq32), "PT", sympl(ptranspose(eq32)))
print("sympl tmss", sympl(T), "PT", sympl(ptranspose(T)))
sym = lambda Q, P, kq, kp: assemble(mp.diag([Q, P]), mp.diag([Q, P]), mp.diag([kq, kp]))
print("sympl sym(2,2,1.8,1.8)", sympl(sym(2, 2, 1.8, 1.8)))
print("sympl sym(2,2,.9,-.9) PT", sympl(ptranspose(sym(2, 2, 0.9, -0.9))))
print("sympl sym(2,2,1.5,-1.5)", sympl(sym(2, 2, 1.5, -1.5)), sympl(ptranspose(sym(2, 2, 1.5, -1.5))))
print("F sym1.5", fid(sym(2, 2, 1.5, -1.5), 1, 1, 1), fid(sym(2, 2, 1.5, -1.5), 0.2, 1, 1))
print("cft 2.5", 1 / (1 + mp.mpf(2.5)**2))
print("coth1", mp.coth(1), 2 * mp.coth(1))
e = mp.e
print("w_sum tmss", 4 * (e**-2 - 1), "w_prod", 4 * e**-4 - 4, "w_all", 4 * (4 * e**-2 - 4) + (2 * e**-2 - 2)**2,
      "w_rob", 8 - 8 * mp.cosh(2), "var", 2 * e**-2, "duan", 4 * e**-2)
# ratio max over g for eq32 at (1, 0.3)
f = lambda g: fid(eq32, 1, 0.3, g) * (1 + g**2)
gbest = mp.findroot(lambda g: mp.diff(f, g), 0.3)
print("eq32 (1,.3) best g", gbest, "max ratio", f(gbest))
