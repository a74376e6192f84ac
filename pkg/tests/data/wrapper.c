/* One sin call instruction inside a noinline helper, reached from two
 * distinct callers: return-address identity sees one site, stack-frame
 * identity sees two. */
#include <math.h>
#include <stdio.h>

__attribute__((noinline)) static double wrap(double x)
{
    double s = sin(x);
    return s * 2.0 + 1.0;  /* keeps the call from being tail-call lowered */
}

int main(void)
{
    double a = wrap(1.0);
    double b = wrap(2.0);
    printf("%a %a\n", a, b);
    return 0;
}
