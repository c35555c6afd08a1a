#pragma once
// Generated by tests/oracles/generate_oracles.py (mpmath, 30 digits).
namespace oracle {
// int_0^2 (1+cos pi x)/(x^2-1)^2 dx
inline constexpr double finite_shell_integral = 2.393611133172436343;
// int_0^inf sin(5k) e^{-k}/(1+k^2) dk (the part beyond 80 is below 1e-34)
inline constexpr double damped_sine_integral = 0.20158644274264598693;
// pointlike excitation, a = 0.1
inline constexpr double P0_a0p1 = 0.084718087828266916587;
// pointlike excitation, a = 1
inline constexpr double P0_a1 = 0.018726157584324929868;
// pointlike excitation, a = 2.5
inline constexpr double P0_a2p5 = 0.0013959197455862366283;
// smeared excitation, a = 1, width = 1
inline constexpr double P1_a1 = 0.014285064603068577648;
// pointlike entangling term, a = 1, s = 1
inline constexpr double M0_a1_s1_re = 0.033920026150351823339;
inline constexpr double M0_a1_s1_im = -0.051650580877266097624;
// pointlike entangling term, a = 0.1, s = 0.1
inline constexpr double M0_a0p1_s0p1_re = -0.4725966068610110425;
inline constexpr double M0_a0p1_s0p1_im = 1.1459911489911520486;
// pointlike entangling term, a = 2.5, s = 3
inline constexpr double M0_a2p5_s3_re = -0.000012368565233370675496;
inline constexpr double M0_a2p5_s3_im = -0.00068783828551308679224;
// pointlike entangling term, a = 0.5, s = 2
inline constexpr double M0_a0p5_s2_re = -0.0083677623975619607292;
inline constexpr double M0_a0p5_s2_im = -0.030553948789053420165;
// smeared entangling term, a = 1, s = 1, width = 1
inline constexpr double M1_a1_s1_re = 0.027989889067274998634;
inline constexpr double M1_a1_s1_im = -0.036102462064410701179;
// int_0^inf k^3 A''(1+k) dk
inline constexpr double gamma_corr_a1 = 2.2178372077169544002;
// int_0^inf k^3 A''(0.1+k) dk
inline constexpr double gamma_corr_a0p1 = 10.033608149780855802;
// int_0^inf k A(1 + 1 k + k^2/(2*900)) dk
inline constexpr double recoil_I1_a1_m900_r1 = 0.36885456876017039154;
// int_0^inf k^3 A''(1 + 1 k + k^2/(2*900)) dk
inline constexpr double recoil_I3_a1_m900_r1 = 2.2023746599366862039;
// int_0^inf k A(0.5 + 0.26 k + k^2/(2*900)) dk
inline constexpr double recoil_I1_a0p5_m900_r0p26 = 13.250539820893904899;
// int_0^inf k^3 A''(0.5 + 0.26 k + k^2/(2*900)) dk
inline constexpr double recoil_I3_a0p5_m900_r0p26 = 1106.997267373042468;
// time-ordered switching integral at u = 0.3, v = 1.0
inline constexpr double T_u0p3_v1p0_re = -0.29253647182487193025;
inline constexpr double T_u0p3_v1p0_im = 1.577095032364639374;
// time-ordered switching integral at u = -0.7, v = -1.0
inline constexpr double T_um0p7_vm1p0_re = -1.1639344783777450154;
inline constexpr double T_um0p7_vm1p0_im = -0.79564276265323230799;
// time-ordered switching integral at u = 1.2, v = 0.4
inline constexpr double T_u1p2_v0p4_re = -1.3736026782193407385;
inline constexpr double T_u1p2_v0p4_im = 0.41094250267999939453;
// time-ordered switching integral at u = 0.0, v = 2.5
inline constexpr double T_u0p0_v2p5_re = -0.63492063492063492063;
inline constexpr double T_u0p0_v2p5_im = 0.25396825396825396825;
}  // namespace oracle
