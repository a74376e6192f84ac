/*
 * mathbench: deterministic libm driver for interposition testing.
 *
 * Reads lines "<func> <hexfloat> [<hexfloat>]" from the file given as
 * argv[1], calls the named math function, and prints one hexadecimal-float
 * result per line (two for sincos).  A per-function call tally goes to
 * stderr at the end so profiling results can be cross-checked against the
 * subject's own counts.  Build dynamically linked with -fno-builtin.
 */

#define _GNU_SOURCE
#include <locale.h>
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#define NFUNCS 20

static const char *names[NFUNCS] = {
    "sin", "cos", "tan", "asin", "acos", "atan", "atan2", "exp", "log",
    "log2", "log10", "pow", "sqrt", "cbrt", "hypot", "fmod", "floor",
    "ceil", "fabs", "sincos",
};
static long tally[NFUNCS];

static int name_index(const char *s)
{
    for (int i = 0; i < NFUNCS; i++)
        if (strcmp(names[i], s) == 0)
            return i;
    return -1;
}

int main(int argc, char **argv)
{
    setlocale(LC_ALL, "C");
    if (argc != 2) {
        fprintf(stderr, "usage: %s <input-file>\n", argv[0]);
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
        char func[32];
        double a = 0.0, b = 0.0;
        int nf = sscanf(line, "%31s %lf %lf", func, &a, &b);
        if (nf < 1 || func[0] == '#')
            continue;
        int idx = name_index(func);
        if (idx < 0) {
            fprintf(stderr, "mathbench: line %d: unknown function '%s'\n", lineno, func);
            return 2;
        }
        tally[idx]++;
        double r, r2;
        if (strcmp(func, "sin") == 0) r = sin(a);
        else if (strcmp(func, "cos") == 0) r = cos(a);
        else if (strcmp(func, "tan") == 0) r = tan(a);
        else if (strcmp(func, "asin") == 0) r = asin(a);
        else if (strcmp(func, "acos") == 0) r = acos(a);
        else if (strcmp(func, "atan") == 0) r = atan(a);
        else if (strcmp(func, "atan2") == 0) r = atan2(a, b);
        else if (strcmp(func, "exp") == 0) r = exp(a);
        else if (strcmp(func, "log") == 0) r = log(a);
        else if (strcmp(func, "log2") == 0) r = log2(a);
        else if (strcmp(func, "log10") == 0) r = log10(a);
        else if (strcmp(func, "pow") == 0) r = pow(a, b);
        else if (strcmp(func, "sqrt") == 0) r = sqrt(a);
        else if (strcmp(func, "cbrt") == 0) r = cbrt(a);
        else if (strcmp(func, "hypot") == 0) r = hypot(a, b);
        else if (strcmp(func, "fmod") == 0) r = fmod(a, b);
        else if (strcmp(func, "floor") == 0) r = floor(a);
        else if (strcmp(func, "ceil") == 0) r = ceil(a);
        else if (strcmp(func, "fabs") == 0) r = fabs(a);
        else { sincos(a, &r, &r2); printf("%a\n%a\n", r, r2); continue; }
        printf("%a\n", r);
    }
    fclose(fp);

    for (int i = 0; i < NFUNCS; i++)
        if (tally[i])
            fprintf(stderr, "# %s %ld\n", names[i], tally[i]);
    return 0;
}
