/*
 * vprec-libm: preloadable interposer for the binary64 libm entry points.
 *
 * Modes (VPREC_LIBM_MODE):
 *   passthrough  delegate every call to the next definition in resolution
 *                order (bit-transparent; the default)
 *   profile      delegate, and additionally aggregate per-call-site counts,
 *                operand/output intervals and special-value counters; the
 *                profile is written at exit or on vprec_libm_flush()
 *   execute      evaluate in binary128 (libquadmath) and round the result
 *                into the reduced format configured for the call-site
 *
 * Environment: VPREC_LIBM_PROFILE_FILE, VPREC_LIBM_CONFIG_FILE,
 * VPREC_LIBM_NEWSITES_FILE, VPREC_LIBM_STACK_FRAMES (0 = return address
 * only; K > 0 hashes the top K subject frames into the site id).
 *
 * Call-site ids are hashes of (object basename, module-relative offset,
 * function name), so they are stable under address-space layout
 * randomization.  Statically linked subjects are not supported: the
 * interposition relies on dynamic symbol resolution.
 */

#define _GNU_SOURCE
#include <dlfcn.h>
#include <errno.h>
#include <execinfo.h>
#include <inttypes.h>
#include <limits.h>
#include <locale.h>
#include <pthread.h>
#include <quadmath.h>
#include <stdint.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
#include <unistd.h>

/* ------------------------------------------------------------------ */
/* function table                                                      */
/* ------------------------------------------------------------------ */

enum {
    F_SIN, F_COS, F_TAN, F_ASIN, F_ACOS, F_ATAN, F_ATAN2, F_EXP, F_LOG,
    F_LOG2, F_LOG10, F_POW, F_SQRT, F_CBRT, F_HYPOT, F_FMOD, F_FLOOR,
    F_CEIL, F_FABS, F_SINCOS, F_COUNT
};

static const struct { const char *name; int arity; } FUNCS[F_COUNT] = {
    [F_SIN] = {"sin", 1},     [F_COS] = {"cos", 1},     [F_TAN] = {"tan", 1},
    [F_ASIN] = {"asin", 1},   [F_ACOS] = {"acos", 1},   [F_ATAN] = {"atan", 1},
    [F_ATAN2] = {"atan2", 2}, [F_EXP] = {"exp", 1},     [F_LOG] = {"log", 1},
    [F_LOG2] = {"log2", 1},   [F_LOG10] = {"log10", 1}, [F_POW] = {"pow", 2},
    [F_SQRT] = {"sqrt", 1},   [F_CBRT] = {"cbrt", 1},   [F_HYPOT] = {"hypot", 2},
    [F_FMOD] = {"fmod", 2},   [F_FLOOR] = {"floor", 1}, [F_CEIL] = {"ceil", 1},
    [F_FABS] = {"fabs", 1},   [F_SINCOS] = {"sincos", 1},
};

typedef double (*fn1_t)(double);
typedef double (*fn2_t)(double, double);
typedef void (*fnsc_t)(double, double *, double *);

static void *real_fn[F_COUNT];

/* ------------------------------------------------------------------ */
/* global state                                                        */
/* ------------------------------------------------------------------ */

enum vp_mode { MODE_PASSTHROUGH, MODE_PROFILE, MODE_EXECUTE };

typedef struct {
    int p, r;
    int emin, emax;
    int passthrough;
} vp_format;

typedef struct {
    uint64_t id;
    int func;
    vp_format fmt;
    int used;
} cfg_entry;

typedef struct {
    uint64_t id;
    int func;
    uint64_t calls, nan_count, inf_count;
    double in0_min, in0_max, in1_min, in1_max, out_min, out_max;
    int used;
} prof_rec;

typedef struct {
    void *addr;
    int func;
    uint64_t id;
    int used;
} memo_entry;

typedef struct {
    uint64_t id;
    int used;
} id_entry;

static enum vp_mode g_mode = MODE_PASSTHROUGH;
static int g_stack_frames = 0;
static const char *g_profile_path = "vprec-libm.profile";
static const char *g_newsites_path = NULL;
static vp_format g_default_fmt;

static cfg_entry *g_cfg = NULL;
static size_t g_cfg_cap = 0;

static prof_rec *g_prof = NULL;
static size_t g_prof_cap = 0, g_prof_len = 0;

static memo_entry *g_memo = NULL;
static size_t g_memo_cap = 0, g_memo_len = 0;

static id_entry *g_logged = NULL;
static size_t g_logged_cap = 0, g_logged_len = 0;

static pthread_mutex_t g_lock = PTHREAD_MUTEX_INITIALIZER;
static pthread_once_t g_once = PTHREAD_ONCE_INIT;

/* ------------------------------------------------------------------ */
/* init helpers                                                        */
/* ------------------------------------------------------------------ */

static void fatal(const char *msg, const char *detail)
{
    fprintf(stderr, "vprec-libm: fatal: %s%s%s\n", msg,
            detail ? ": " : "", detail ? detail : "");
    _exit(1);
}

static void resolve_real_symbols(void)
{
    static void *libm_handle = NULL;
    for (int i = 0; i < F_COUNT; i++) {
        void *p = dlsym(RTLD_NEXT, FUNCS[i].name);
        if (!p) {
            /* dlopen()ed (not preloaded): nothing follows us in the link
             * map, so take the genuine definitions from libm directly. */
            if (!libm_handle)
                libm_handle = dlopen("libm.so.6", RTLD_LAZY | RTLD_LOCAL);
            if (libm_handle)
                p = dlsym(libm_handle, FUNCS[i].name);
        }
        if (!p)
            fatal("cannot resolve genuine symbol", FUNCS[i].name);
        real_fn[i] = p;
    }
}

static void format_derive(vp_format *f)
{
    int bias = (1 << (f->r - 1)) - 1;
    f->emax = bias;
    f->emin = f->r == 1 ? 0 : 1 - bias;
}

static int func_by_name(const char *name)
{
    for (int i = 0; i < F_COUNT; i++)
        if (strcmp(FUNCS[i].name, name) == 0)
            return i;
    return -1;
}

/* --- config hash table (immutable after load; read lock-free) ------ */

static cfg_entry *cfg_slot(uint64_t id)
{
    size_t mask = g_cfg_cap - 1;
    for (size_t i = id & mask;; i = (i + 1) & mask) {
        if (!g_cfg[i].used || g_cfg[i].id == id)
            return &g_cfg[i];
    }
}

static void parse_config_file(const char *path)
{
    FILE *fp = fopen(path, "r");
    if (!fp)
        fatal("cannot open config file", path);

    locale_t cloc = newlocale(LC_NUMERIC_MASK, "C", (locale_t)0);
    locale_t old = uselocale(cloc);

    char line[1024];
    int lineno = 0;
    int have_default = 0;
    size_t nsites = 0;

    /* first pass: count sites for table sizing */
    while (fgets(line, sizeof line, fp)) {
        if (strncmp(line, "site ", 5) == 0)
            nsites++;
    }
    g_cfg_cap = 64;
    while (g_cfg_cap < nsites * 2 + 8)
        g_cfg_cap <<= 1;
    g_cfg = calloc(g_cfg_cap, sizeof *g_cfg);
    if (!g_cfg)
        fatal("out of memory", NULL);

    rewind(fp);
    while (fgets(line, sizeof line, fp)) {
        lineno++;
        char *nl = strchr(line, '\n');
        if (nl)
            *nl = 0;
        if (lineno == 1) {
            if (strcmp(line, "#vprec-libm-config v1") != 0)
                fatal("bad config header", line);
            continue;
        }
        if (!line[0] || line[0] == '#')
            continue;
        if (strncmp(line, "default ", 8) == 0) {
            int p = -1, r = -1;
            if (sscanf(line + 8, "p=%d r=%d", &p, &r) != 2 ||
                p < 0 || p > 52 || r < 1 || r > 11)
                fatal("bad default line in config", line);
            g_default_fmt.p = p;
            g_default_fmt.r = r;
            g_default_fmt.passthrough = 0;
            format_derive(&g_default_fmt);
            have_default = 1;
            continue;
        }
        if (strncmp(line, "site ", 5) == 0) {
            char idbuf[64], funcbuf[32], modebuf[32];
            int p = -1, r = -1;
            if (sscanf(line + 5, "id=%63s func=%31s p=%d r=%d mode=%31s",
                       idbuf, funcbuf, &p, &r, modebuf) != 5)
                fatal("bad site line in config", line);
            if (p < 0 || p > 52 || r < 1 || r > 11)
                fatal("p or r out of range in config", line);
            int func = func_by_name(funcbuf);
            if (func < 0)
                fatal("unknown function in config", funcbuf);
            errno = 0;
            char *end = NULL;
            uint64_t id = strtoull(idbuf, &end, 16);
            if (errno || !end || *end)
                fatal("bad site id in config", idbuf);
            int passthrough;
            if (strcmp(modebuf, "vprec") == 0)
                passthrough = 0;
            else if (strcmp(modebuf, "passthrough") == 0)
                passthrough = 1;
            else
                fatal("bad site mode in config", modebuf);
            cfg_entry *e = cfg_slot(id);
            if (e->used)
                fatal("duplicate site id in config", idbuf);
            e->id = id;
            e->func = func;
            e->fmt.p = p;
            e->fmt.r = r;
            e->fmt.passthrough = passthrough;
            format_derive(&e->fmt);
            e->used = 1;
            continue;
        }
        fatal("unrecognized config line", line);
    }
    fclose(fp);
    uselocale(old);
    freelocale(cloc);
    if (!have_default)
        fatal("config has no default line", path);
}

static void vp_atexit_flush(void);

static void vp_init(void)
{
    resolve_real_symbols();

    const char *mode = getenv("VPREC_LIBM_MODE");
    if (!mode || !*mode || strcmp(mode, "passthrough") == 0)
        g_mode = MODE_PASSTHROUGH;
    else if (strcmp(mode, "profile") == 0)
        g_mode = MODE_PROFILE;
    else if (strcmp(mode, "execute") == 0)
        g_mode = MODE_EXECUTE;
    else
        fatal("VPREC_LIBM_MODE must be passthrough, profile or execute", mode);

    const char *frames = getenv("VPREC_LIBM_STACK_FRAMES");
    if (frames && *frames) {
        g_stack_frames = atoi(frames);
        if (g_stack_frames < 0 || g_stack_frames > 64)
            fatal("VPREC_LIBM_STACK_FRAMES out of range", frames);
    }

    const char *pp = getenv("VPREC_LIBM_PROFILE_FILE");
    if (pp && *pp)
        g_profile_path = pp;
    g_newsites_path = getenv("VPREC_LIBM_NEWSITES_FILE");

    if (g_mode == MODE_PROFILE) {
        g_prof_cap = 1024;
        g_prof = calloc(g_prof_cap, sizeof *g_prof);
        if (!g_prof)
            fatal("out of memory", NULL);
        atexit(vp_atexit_flush);
    }
    if (g_mode == MODE_EXECUTE) {
        const char *cfg = getenv("VPREC_LIBM_CONFIG_FILE");
        if (!cfg || !*cfg)
            fatal("execute mode needs VPREC_LIBM_CONFIG_FILE", NULL);
        parse_config_file(cfg);
    }
    g_memo_cap = 1024;
    g_memo = calloc(g_memo_cap, sizeof *g_memo);
    if (!g_memo)
        fatal("out of memory", NULL);
}

__attribute__((constructor)) static void vp_ctor(void)
{
    pthread_once(&g_once, vp_init);
}

/* ------------------------------------------------------------------ */
/* call-site identification                                            */
/* ------------------------------------------------------------------ */

static uint64_t fnv1a(uint64_t h, const void *data, size_t len)
{
    const unsigned char *p = data;
    for (size_t i = 0; i < len; i++) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

static const char *base_name(const char *path)
{
    const char *s = strrchr(path, '/');
    return s ? s + 1 : path;
}

static uint64_t hash_frame(uint64_t h, void *addr)
{
    Dl_info info;
    const char *obj = "?";
    uint64_t off = (uint64_t)(uintptr_t)addr;
    if (dladdr(addr, &info) && info.dli_fname) {
        obj = base_name(info.dli_fname);
        off = (uint64_t)((char *)addr - (char *)info.dli_fbase);
    }
    h = fnv1a(h, obj, strlen(obj) + 1);
    unsigned char le[8];
    for (int i = 0; i < 8; i++)
        le[i] = (unsigned char)(off >> (8 * i));
    return fnv1a(h, le, 8);
}

static uint64_t site_id_multiframe(void *ret_addr, int func)
{
    void *buf[80];
    int n = backtrace(buf, g_stack_frames + 16);
    uint64_t h = 0xcbf29ce484222325ULL;
    int taken = 0;
    int seen_caller = 0;
    for (int i = 0; i < n && taken < g_stack_frames; i++) {
        /* skip our own frames (backtrace, site_id_multiframe, wrapper) */
        if (!seen_caller) {
            if (buf[i] == ret_addr)
                seen_caller = 1;
            else
                continue;
        }
        h = hash_frame(h, buf[i]);
        taken++;
    }
    if (!taken)
        h = hash_frame(h, ret_addr);
    return fnv1a(h, FUNCS[func].name, strlen(FUNCS[func].name) + 1);
}

/* memoized single-frame resolution; assumes g_lock is held */
static memo_entry *memo_lookup(void *addr, int func)
{
    size_t mask = g_memo_cap - 1;
    uint64_t k = ((uint64_t)(uintptr_t)addr >> 2) * 0x9e3779b97f4a7c15ULL + (uint64_t)func;
    for (size_t i = k & mask;; i = (i + 1) & mask) {
        if (!g_memo[i].used || (g_memo[i].addr == addr && g_memo[i].func == func))
            return &g_memo[i];
    }
}

static void memo_grow(void)
{
    size_t old_cap = g_memo_cap;
    memo_entry *old = g_memo;
    g_memo_cap = old_cap * 2;
    g_memo = calloc(g_memo_cap, sizeof *g_memo);
    if (!g_memo)
        fatal("out of memory", NULL);
    g_memo_len = 0;
    for (size_t i = 0; i < old_cap; i++) {
        if (old[i].used) {
            memo_entry *e = memo_lookup(old[i].addr, old[i].func);
            *e = old[i];
            g_memo_len++;
        }
    }
    free(old);
}

static uint64_t resolve_site(void *ret_addr, int func)
{
    if (g_stack_frames > 0) {
        /* deep stacks may differ above an identical immediate site, so the
         * multi-frame variant cannot be memoized by return address */
        return site_id_multiframe(ret_addr, func);
    }
    pthread_mutex_lock(&g_lock);
    memo_entry *e = memo_lookup(ret_addr, func);
    if (!e->used) {
        if ((g_memo_len + 1) * 10 > g_memo_cap * 7) {
            memo_grow();
            e = memo_lookup(ret_addr, func);
        }
        e->addr = ret_addr;
        e->func = func;
        uint64_t h = 0xcbf29ce484222325ULL;
        h = hash_frame(h, ret_addr);
        e->id = fnv1a(h, FUNCS[func].name, strlen(FUNCS[func].name) + 1);
        e->used = 1;
        g_memo_len++;
    }
    uint64_t id = e->id;
    pthread_mutex_unlock(&g_lock);
    return id;
}

/* ------------------------------------------------------------------ */
/* profiling                                                           */
/* ------------------------------------------------------------------ */

static prof_rec *prof_slot(uint64_t id, int func)
{
    size_t mask = g_prof_cap - 1;
    for (size_t i = (id ^ (uint64_t)func) & mask;; i = (i + 1) & mask) {
        if (!g_prof[i].used || (g_prof[i].id == id && g_prof[i].func == func))
            return &g_prof[i];
    }
}

static void prof_grow(void)
{
    size_t old_cap = g_prof_cap;
    prof_rec *old = g_prof;
    g_prof_cap = old_cap * 2;
    g_prof = calloc(g_prof_cap, sizeof *g_prof);
    if (!g_prof)
        fatal("out of memory", NULL);
    for (size_t i = 0; i < old_cap; i++) {
        if (old[i].used)
            *prof_slot(old[i].id, old[i].func) = old[i];
    }
    free(old);
}

static void iv_update(double *mn, double *mx, double v)
{
    if (v < *mn)
        *mn = v;
    if (v > *mx)
        *mx = v;
}

static void prof_record(uint64_t id, int func, int arity,
                        double a0, double a1, double o0, double o1, int two_out)
{
    pthread_mutex_lock(&g_lock);
    prof_rec *rec = prof_slot(id, func);
    if (!rec->used) {
        if ((g_prof_len + 1) * 10 > g_prof_cap * 7) {
            prof_grow();
            rec = prof_slot(id, func);
        }
        rec->id = id;
        rec->func = func;
        rec->calls = rec->nan_count = rec->inf_count = 0;
        rec->in0_min = rec->in1_min = rec->out_min = __builtin_inf();
        rec->in0_max = rec->in1_max = rec->out_max = -__builtin_inf();
        rec->used = 1;
        g_prof_len++;
    }
    rec->calls++;
    int any_nan = 0, any_inf = 0;
    int idx = 0;
    double seq[4];
    seq[idx++] = a0;
    if (arity == 2)
        seq[idx++] = a1;
    seq[idx++] = o0;
    if (two_out)
        seq[idx++] = o1;
    for (int i = 0; i < idx; i++) {
        if (seq[i] != seq[i])
            any_nan = 1;
        else if (seq[i] == __builtin_inf() || seq[i] == -__builtin_inf())
            any_inf = 1;
    }
    if (any_nan)
        rec->nan_count++;
    if (any_inf)
        rec->inf_count++;
    if (a0 == a0 && __builtin_isfinite(a0))
        iv_update(&rec->in0_min, &rec->in0_max, a0);
    if (arity == 2 && a1 == a1 && __builtin_isfinite(a1))
        iv_update(&rec->in1_min, &rec->in1_max, a1);
    if (o0 == o0 && __builtin_isfinite(o0))
        iv_update(&rec->out_min, &rec->out_max, o0);
    if (two_out && o1 == o1 && __builtin_isfinite(o1))
        iv_update(&rec->out_min, &rec->out_max, o1);
    pthread_mutex_unlock(&g_lock);
}

static int rec_cmp(const void *pa, const void *pb)
{
    const prof_rec *a = pa, *b = pb;
    if (a->calls != b->calls)
        return a->calls > b->calls ? -1 : 1;
    if (a->id != b->id)
        return a->id < b->id ? -1 : 1;
    return 0;
}

static void flush_profile_locked(void)
{
    if (g_mode != MODE_PROFILE || !g_prof)
        return;

    prof_rec *snap = malloc(g_prof_len * sizeof *snap);
    if (!snap && g_prof_len) {
        fprintf(stderr, "vprec-libm: profile flush: out of memory\n");
        return;
    }
    size_t n = 0;
    for (size_t i = 0; i < g_prof_cap; i++)
        if (g_prof[i].used)
            snap[n++] = g_prof[i];
    qsort(snap, n, sizeof *snap, rec_cmp);

    char tmp[PATH_MAX];
    if (snprintf(tmp, sizeof tmp, "%s.tmpXXXXXX", g_profile_path) >= (int)sizeof tmp) {
        fprintf(stderr, "vprec-libm: profile path too long\n");
        free(snap);
        return;
    }
    int fd = mkstemp(tmp);
    if (fd < 0) {
        fprintf(stderr, "vprec-libm: cannot write profile %s: %s\n",
                g_profile_path, strerror(errno));
        free(snap);
        return;
    }
    FILE *fp = fdopen(fd, "w");
    if (!fp) {
        close(fd);
        unlink(tmp);
        free(snap);
        return;
    }
    locale_t cloc = newlocale(LC_NUMERIC_MASK, "C", (locale_t)0);
    locale_t old = uselocale(cloc);
    fprintf(fp, "#vprec-libm-profile v1\n");
    for (size_t i = 0; i < n; i++) {
        const prof_rec *r = &snap[i];
        fprintf(fp, "func=%s id=0x%" PRIx64 " calls=%" PRIu64
                    " nan=%" PRIu64 " inf=%" PRIu64 " in0=%a:%a",
                FUNCS[r->func].name, r->id, r->calls, r->nan_count,
                r->inf_count, r->in0_min, r->in0_max);
        if (FUNCS[r->func].arity == 2)
            fprintf(fp, " in1=%a:%a", r->in1_min, r->in1_max);
        fprintf(fp, " out=%a:%a\n", r->out_min, r->out_max);
    }
    uselocale(old);
    freelocale(cloc);
    free(snap);
    if (fclose(fp) != 0 || rename(tmp, g_profile_path) != 0) {
        fprintf(stderr, "vprec-libm: cannot finalize profile %s: %s\n",
                g_profile_path, strerror(errno));
        unlink(tmp);
    }
}

void vprec_libm_flush(void)
{
    pthread_once(&g_once, vp_init);
    pthread_mutex_lock(&g_lock);
    flush_profile_locked();
    pthread_mutex_unlock(&g_lock);
}

static void vp_atexit_flush(void)
{
    pthread_mutex_lock(&g_lock);
    flush_profile_locked();
    pthread_mutex_unlock(&g_lock);
}

/* ------------------------------------------------------------------ */
/* execute mode: binary128 evaluation + rounding into the target format */
/* ------------------------------------------------------------------ */

static double vp_round(__float128 z, const vp_format *f)
{
    if (isnanq(z) || isinfq(z) || z == 0.0Q)
        return (double)z;
    double sign = z < 0.0Q ? -1.0 : 1.0;
    __float128 m = fabsq(z);
    int e;
    frexpq(m, &e);
    int ez = e - 1;
    /* half-ulp-at-(p+1) add, then truncation at p fraction bits */
    __float128 y = m + scalbnq(1.0Q, ez - f->p - 1);
    __float128 t = floorq(scalbnq(y, f->p - ez));
    __float128 rr = scalbnq(t, ez - f->p);
    frexpq(rr, &e);
    int er = e - 1;
    if (er > f->emax)
        return sign * __builtin_inf();
    if (er < f->emin)
        return sign * 0.0;
    return sign * (double)rr;
}

/* first-sighting set for the new-sites side log; g_lock held */
static int logged_insert(uint64_t id)
{
    if (g_logged == NULL) {
        g_logged_cap = 256;
        g_logged = calloc(g_logged_cap, sizeof *g_logged);
        if (!g_logged)
            return 0;
    }
    if ((g_logged_len + 1) * 10 > g_logged_cap * 7) {
        size_t old_cap = g_logged_cap;
        id_entry *old = g_logged;
        g_logged_cap *= 2;
        g_logged = calloc(g_logged_cap, sizeof *g_logged);
        if (!g_logged) {
            g_logged = old;
            g_logged_cap = old_cap;
            return 0;
        }
        g_logged_len = 0;
        for (size_t i = 0; i < old_cap; i++)
            if (old[i].used)
                logged_insert(old[i].id);
        free(old);
    }
    size_t mask = g_logged_cap - 1;
    for (size_t i = id & mask;; i = (i + 1) & mask) {
        if (g_logged[i].used) {
            if (g_logged[i].id == id)
                return 0;  /* already noted */
            continue;
        }
        g_logged[i].id = id;
        g_logged[i].used = 1;
        g_logged_len++;
        return 1;
    }
}

static const vp_format *exec_format(uint64_t site_id, int func)
{
    cfg_entry *e = cfg_slot(site_id);
    if (e->used)
        return &e->fmt;
    /* unconfigured site: run with the default format; note it once in the
     * side log so the explorer can pick it up */
    if (g_newsites_path) {
        pthread_mutex_lock(&g_lock);
        if (logged_insert(site_id)) {
            FILE *fp = fopen(g_newsites_path, "a");
            if (fp) {
                fprintf(fp, "site id=0x%" PRIx64 " func=%s p=%d r=%d mode=vprec\n",
                        site_id, FUNCS[func].name, g_default_fmt.p, g_default_fmt.r);
                fclose(fp);
            }
        }
        pthread_mutex_unlock(&g_lock);
    }
    return &g_default_fmt;
}

/* quadmath evaluation, one entry per function */
static __float128 quad_eval1(int func, __float128 x)
{
    switch (func) {
    case F_SIN:   return sinq(x);
    case F_COS:   return cosq(x);
    case F_TAN:   return tanq(x);
    case F_ASIN:  return asinq(x);
    case F_ACOS:  return acosq(x);
    case F_ATAN:  return atanq(x);
    case F_EXP:   return expq(x);
    case F_LOG:   return logq(x);
    case F_LOG2:  return log2q(x);
    case F_LOG10: return log10q(x);
    case F_SQRT:  return sqrtq(x);
    case F_CBRT:  return cbrtq(x);
    case F_FLOOR: return floorq(x);
    case F_CEIL:  return ceilq(x);
    case F_FABS:  return fabsq(x);
    }
    return nanq("");
}

static __float128 quad_eval2(int func, __float128 x, __float128 y)
{
    switch (func) {
    case F_ATAN2: return atan2q(x, y);
    case F_POW:   return powq(x, y);
    case F_HYPOT: return hypotq(x, y);
    case F_FMOD:  return fmodq(x, y);
    }
    return nanq("");
}

/* ------------------------------------------------------------------ */
/* exported entry points                                               */
/* ------------------------------------------------------------------ */

#define UNARY_BODY(FID)                                                     \
    pthread_once(&g_once, vp_init);                                         \
    if (g_mode == MODE_PASSTHROUGH)                                         \
        return ((fn1_t)real_fn[FID])(x);                                    \
    uint64_t site = resolve_site(__builtin_return_address(0), FID);         \
    if (g_mode == MODE_PROFILE) {                                           \
        double out = ((fn1_t)real_fn[FID])(x);                              \
        prof_record(site, FID, 1, x, 0.0, out, 0.0, 0);                     \
        return out;                                                         \
    }                                                                       \
    const vp_format *f = exec_format(site, FID);                            \
    if (f->passthrough)                                                     \
        return ((fn1_t)real_fn[FID])(x);                                    \
    return vp_round(quad_eval1(FID, (__float128)x), f)

#define BINARY_BODY(FID)                                                    \
    pthread_once(&g_once, vp_init);                                         \
    if (g_mode == MODE_PASSTHROUGH)                                         \
        return ((fn2_t)real_fn[FID])(x, y);                                 \
    uint64_t site = resolve_site(__builtin_return_address(0), FID);         \
    if (g_mode == MODE_PROFILE) {                                           \
        double out = ((fn2_t)real_fn[FID])(x, y);                           \
        prof_record(site, FID, 2, x, y, out, 0.0, 0);                       \
        return out;                                                         \
    }                                                                       \
    const vp_format *f = exec_format(site, FID);                            \
    if (f->passthrough)                                                     \
        return ((fn2_t)real_fn[FID])(x, y);                                 \
    return vp_round(quad_eval2(FID, (__float128)x, (__float128)y), f)

double sin(double x)   { UNARY_BODY(F_SIN); }
double cos(double x)   { UNARY_BODY(F_COS); }
double tan(double x)   { UNARY_BODY(F_TAN); }
double asin(double x)  { UNARY_BODY(F_ASIN); }
double acos(double x)  { UNARY_BODY(F_ACOS); }
double atan(double x)  { UNARY_BODY(F_ATAN); }
double exp(double x)   { UNARY_BODY(F_EXP); }
double log(double x)   { UNARY_BODY(F_LOG); }
double log2(double x)  { UNARY_BODY(F_LOG2); }
double log10(double x) { UNARY_BODY(F_LOG10); }
double sqrt(double x)  { UNARY_BODY(F_SQRT); }
double cbrt(double x)  { UNARY_BODY(F_CBRT); }
double floor(double x) { UNARY_BODY(F_FLOOR); }
double ceil(double x)  { UNARY_BODY(F_CEIL); }
double fabs(double x)  { UNARY_BODY(F_FABS); }

double atan2(double x, double y) { BINARY_BODY(F_ATAN2); }
double pow(double x, double y)   { BINARY_BODY(F_POW); }
double hypot(double x, double y) { BINARY_BODY(F_HYPOT); }
double fmod(double x, double y)  { BINARY_BODY(F_FMOD); }

void sincos(double x, double *s, double *c)
{
    pthread_once(&g_once, vp_init);
    if (g_mode == MODE_PASSTHROUGH) {
        ((fnsc_t)real_fn[F_SINCOS])(x, s, c);
        return;
    }
    uint64_t site = resolve_site(__builtin_return_address(0), F_SINCOS);
    if (g_mode == MODE_PROFILE) {
        ((fnsc_t)real_fn[F_SINCOS])(x, s, c);
        prof_record(site, F_SINCOS, 1, x, 0.0, *s, *c, 1);
        return;
    }
    const vp_format *f = exec_format(site, F_SINCOS);
    if (f->passthrough) {
        ((fnsc_t)real_fn[F_SINCOS])(x, s, c);
        return;
    }
    *s = vp_round(sinq((__float128)x), f);
    *c = vp_round(cosq((__float128)x), f);
}
