"""Three ways to test membership in the k = m = 2 amplituhedron, compared.

Samples points both from the amplituhedron and from the whole Grassmannian,
asks each oracle, and prints the separation certificate that explains why
the bar-line description is enough.
"""

from excyclic import amplituhedron as amp
from excyclic.zmatrix import SplitMix64, random_positive

if __name__ == "__main__":
    z = random_positive(4, 7, 3)
    y = amp.sample_amplituhedron(z, 2, seed=11)
    print("sampled point:", [str(c)[:12] for c in y.coordinates()])
    print("  bar lines:", amp.member_bar(y, z), " cone:", amp.member_cone(y, z),
          " sign flips:", amp.member_signflip(y, z).value)

    rng = SplitMix64(5)
    for index in range(4):
        w = amp.mixed_sample(z, rng, index)
        print(f"mixed sample {index}: bar={amp.member_bar(w, z)!s:5} cone={amp.member_cone(w, z)!s:5} "
              f"flips={amp.member_signflip(w, z).value}")

    rep = amp.oracle_equivalence(z, 2000, seed=1)
    print(f"2000 points: {rep.disagreements} disagreements, {rep.inside} inside, {rep.sign_chambers} sign chambers")

    cert = amp.separation_certificate(z)
    worst = max(cert.pairings.values())
    print(f"separation certificate: passed={cert.passed}, largest pairing {worst} (must be <= 0)")
