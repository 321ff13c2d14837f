count;
{
if (23) {
}
user;
}
let list = function () {
size.resolve;
}, value: Map<string, number>  = !options(...count, ...path)("ok");
{
}
options?.size();
return 37;
if (!key?.count(entry, 94)("ok", [(index)])) {
if ((key>true  /index)) {
}
} else {
user = data();
}
