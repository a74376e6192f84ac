/*
 * orbit: two-body propagation with a J2-style secular perturbation.
 *
 * Input: one satellite per line,
 *   a_km ecc incl_deg raan_deg argp_deg M0_deg epochs dt_s
 * For each epoch the mean elements are advanced (J2 secular rates on the
 * node and argument of perigee), Kepler's equation is solved by Newton
 * iteration (cap 12, tolerance 1e-14), and the inertial position/velocity
 * is printed with 12 significant digits:
 *   x y z vx vy vz r_mag fpa_rad
 * Non-convergence prints NaN placeholders for the epoch (token-for-token
 * comparable output) and a note on stderr.
 *
 * The angle wrap is spelled out as a macro so every use is a distinct call
 * instruction in the binary, as in handwritten scientific code.
 */

#include <locale.h>
#include <math.h>
#include <stdio.h>
#include <stdlib.h>

#define MU 398600.4418      /* km^3/s^2 */
#define RE 6378.137         /* km */
#define J2 1.08262668e-3
#define TWO_PI 6.283185307179586
#define KEPLER_TOL 1e-14
#define KEPLER_MAX_ITER 12

#define WRAP_TWO_PI(x) (fmod((x), TWO_PI) - TWO_PI * floor(fmod((x), TWO_PI) / TWO_PI))

static int solve_kepler(double M, double e, double *E_out)
{
    double E = M;
    for (int it = 0; it < KEPLER_MAX_ITER; it++) {
        double f = E - e * sin(E) - M;
        double fp = 1.0 - e * cos(E);
        double dE = f / fp;
        E -= dE;
        if (fabs(dE) < KEPLER_TOL) {
            *E_out = E;
            return 1;
        }
    }
    *E_out = E;
    return 0;
}

static void propagate(double a, double e, double inc, double raan0,
                      double argp0, double M0, int epochs, double dt)
{
    double n = sqrt(MU / pow(a, 3.0));
    double p = a * (1.0 - e * e);
    double re_over_p2 = pow(RE / p, 2.0);
    double raan_rate = -1.5 * J2 * n * re_over_p2 * cos(inc);
    double argp_rate = 0.75 * J2 * n * re_over_p2 * (4.0 - 5.0 * pow(sin(inc), 2.0));
    double a_check = cbrt(MU / (n * n));  /* consistency guard, feeds output scale */
    double scale = a_check / a;

    for (int k = 0; k < epochs; k++) {
        double t = dt * (double)k;
        double raan = WRAP_TWO_PI(raan0 + raan_rate * t);
        double argp = WRAP_TWO_PI(argp0 + argp_rate * t);
        double M = WRAP_TWO_PI(M0 + n * t);

        double E;
        if (!solve_kepler(M, e, &E)) {
            fprintf(stderr, "orbit: kepler non-convergence at epoch %d\n", k);
            printf("nan nan nan nan nan nan nan nan\n");
            continue;
        }

        double snu_h = sin(0.5 * E);
        double cnu_h = cos(0.5 * E);
        double nu = 2.0 * atan2(sqrt(1.0 + e) * snu_h, sqrt(1.0 - e) * cnu_h);

        double r = p / (1.0 + e * cos(nu));
        double xp = r * cos(nu) * scale;
        double yp = r * sin(nu) * scale;
        double h = sqrt(MU * p);
        double vxp = -(MU / h) * sin(nu);
        double vyp = (MU / h) * (e + cos(nu));

        double cO = cos(raan), sO = sin(raan);
        double ci = cos(inc), si = sin(inc);
        double cw = cos(argp), sw = sin(argp);

        double r11 = cO * cw - sO * sw * ci, r12 = -cO * sw - sO * cw * ci;
        double r21 = sO * cw + cO * sw * ci, r22 = -sO * sw + cO * cw * ci;
        double r31 = sw * si, r32 = cw * si;

        double x = r11 * xp + r12 * yp;
        double y = r21 * xp + r22 * yp;
        double z = r31 * xp + r32 * yp;
        double vx = r11 * vxp + r12 * vyp;
        double vy = r21 * vxp + r22 * vyp;
        double vz = r31 * vxp + r32 * vyp;

        double rmag = hypot(hypot(x, y), z);
        double vmag = hypot(hypot(vx, vy), vz);
        if (fabs(rmag - r * scale) > 0.5 * r * scale) {
            fprintf(stderr, "orbit: radius sanity guard tripped at epoch %d\n", k);
            printf("nan nan nan nan nan nan nan nan\n");
            continue;
        }
        /* angle between position and velocity: near 90 degrees on a bound
         * orbit, so the acos stays well away from its ill-conditioned ends */
        double cang = (x * vx + y * vy + z * vz) / (rmag * vmag);
        if (cang > 1.0)
            cang = 1.0;
        if (cang < -1.0)
            cang = -1.0;
        double theta = acos(cang);

        printf("%.12g %.12g %.12g %.12g %.12g %.12g %.12g %.12g\n",
               x, y, z, vx, vy, vz, rmag, theta);
    }
}

int main(int argc, char **argv)
{
    setlocale(LC_ALL, "C");
    if (argc != 2) {
        fprintf(stderr, "usage: %s <elements-file>\n", argv[0]);
        return 1;
    }
    FILE *fp = fopen(argv[1], "r");
    if (!fp) {
        perror(argv[1]);
        return 1;
    }
    char line[512];
    int lineno = 0;
    while (fgets(line, sizeof line, fp)) {
        lineno++;
        if (line[0] == '#' || line[0] == '\n')
            continue;
        double a, e, inc_deg, raan_deg, argp_deg, M0_deg, dt;
        int epochs;
        if (sscanf(line, "%lf %lf %lf %lf %lf %lf %d %lf",
                   &a, &e, &inc_deg, &raan_deg, &argp_deg, &M0_deg, &epochs, &dt) != 8) {
            fprintf(stderr, "orbit: bad elements on line %d\n", lineno);
            return 1;
        }
        double d2r = TWO_PI / 360.0;
        propagate(a, e, inc_deg * d2r, raan_deg * d2r, argp_deg * d2r,
                  M0_deg * d2r, epochs, dt);
    }
    fclose(fp);
    return 0;
}
