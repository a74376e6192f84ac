/*
 * mathbench_mt: four-thread variant of mathbench exercising interposer
 * thread safety.  Threads process a strided partition of the input lines;
 * results are stored per line and printed in order, so the output is
 * byte-identical to the single-threaded run.
 */

#define _GNU_SOURCE
#include <locale.h>
#include <math.h>
#include <pthread.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#define NTHREADS 4
#define NFUNCS 20
#define MAXLINES 65536

static const char *names[NFUNCS] = {
    "sin", "cos", "tan", "asin", "acos", "atan", "atan2", "exp", "log",
    "log2", "log10", "pow", "sqrt", "cbrt", "hypot", "fmod", "floor",
    "ceil", "fabs", "sincos",
};

struct job {
    int func;
    double a, b;
    double out[2];
    int nout;
};

static struct job jobs[MAXLINES];
static int njobs;
static long tally[NTHREADS][NFUNCS];

static int name_index(const char *s)
{
    for (int i = 0; i < NFUNCS; i++)
        if (strcmp(names[i], s) == 0)
            return i;
    return -1;
}

static double eval1(int f, double a)
{
    switch (f) {
    case 0: return sin(a);
    case 1: return cos(a);
    case 2: return tan(a);
    case 3: return asin(a);
    case 4: return acos(a);
    case 5: return atan(a);
    case 7: return exp(a);
    case 8: return log(a);
    case 9: return log2(a);
    case 10: return log10(a);
    case 12: return sqrt(a);
    case 13: return cbrt(a);
    case 16: return floor(a);
    case 17: return ceil(a);
    case 18: return fabs(a);
    }
    return nan("");
}

static void *worker(void *arg)
{
    long tid = (long)arg;
    for (int i = (int)tid; i < njobs; i += NTHREADS) {
        struct job *j = &jobs[i];
        tally[tid][j->func]++;
        switch (j->func) {
        case 6:  j->out[0] = atan2(j->a, j->b); j->nout = 1; break;
        case 11: j->out[0] = pow(j->a, j->b); j->nout = 1; break;
        case 14: j->out[0] = hypot(j->a, j->b); j->nout = 1; break;
        case 15: j->out[0] = fmod(j->a, j->b); j->nout = 1; break;
        case 19: sincos(j->a, &j->out[0], &j->out[1]); j->nout = 2; break;
        default: j->out[0] = eval1(j->func, j->a); j->nout = 1; break;
        }
    }
    return NULL;
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
            fprintf(stderr, "mathbench_mt: line %d: unknown function '%s'\n", lineno, func);
            return 2;
        }
        if (njobs >= MAXLINES) {
            fprintf(stderr, "mathbench_mt: too many input lines\n");
            return 1;
        }
        jobs[njobs].func = idx;
        jobs[njobs].a = a;
        jobs[njobs].b = b;
        njobs++;
    }
    fclose(fp);

    pthread_t threads[NTHREADS];
    for (long t = 0; t < NTHREADS; t++)
        pthread_create(&threads[t], NULL, worker, (void *)t);
    for (long t = 0; t < NTHREADS; t++)
        pthread_join(threads[t], NULL);

    for (int i = 0; i < njobs; i++)
        for (int k = 0; k < jobs[i].nout; k++)
            printf("%a\n", jobs[i].out[k]);

    for (int f = 0; f < NFUNCS; f++) {
        long sum = 0;
        for (int t = 0; t < NTHREADS; t++)
            sum += tally[t][f];
        if (sum)
            fprintf(stderr, "# %s %ld\n", names[f], sum);
    }
    return 0;
}
